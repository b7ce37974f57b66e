#include "leibniz/heisenberg.hpp"

#include <algorithm>
#include <list>
#include <set>

#include "leibniz/errors.hpp"

namespace leibniz {

HeisenbergBasis heisenberg_basis(std::size_t k) {
  HeisenbergBasis b;
  b.k = k;
  b.labels.push_back("one");
  for (std::size_t i = 1; i <= k; ++i) b.labels.push_back("X" + std::to_string(i));
  for (std::size_t i = 1; i <= k; ++i) b.labels.push_back("D" + std::to_string(i));
  return b;
}

Algebra make_heisenberg(std::size_t n) {
  if (n < 3 || n % 2 == 0)
    throw BadDimensionError("Heisenberg dimension must be odd and >= 3, got " +
                            std::to_string(n));
  const std::size_t k = (n - 1) / 2;
  Algebra A("H" + std::to_string(n), heisenberg_basis(k).labels);
  for (std::size_t i = 1; i <= k; ++i) {
    A.set_product(i, k + i, Vec{{0, Rational(1)}});
    A.set_product(k + i, i, Vec{{0, Rational(-1)}});
  }
  return A;
}

std::pair<Algebra, DirectSumStructure> direct_sum_structured(
    const std::vector<Algebra>& parts, const std::string& name) {
  DirectSumStructure st;
  std::size_t offset = 0;
  for (const Algebra& p : parts) {
    st.dims.push_back(p.dim());
    std::vector<std::size_t> block(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) block[i] = offset + i;
    st.blocks.push_back(std::move(block));
    offset += p.dim();
  }
  return {direct_sum(parts, name), std::move(st)};
}

std::string reject_reason_name(HeisenbergReject r) {
  switch (r) {
    case HeisenbergReject::NotLie:
      return "NotLie";
    case HeisenbergReject::CenterDim:
      return "CenterDim";
    case HeisenbergReject::DegenerateForm:
      return "DegenerateForm";
  }
  throw Error("unreachable reject reason");
}

namespace {

/// [u, w] = c * z with z the fixed central generator; returns c. Well-defined
/// here because the caller has already established [L, L] = span{z}.
Rational pairing(const Algebra& A, const Vec& z, const Vec& u, const Vec& w) {
  const Vec b = A.bracket(u, w);
  if (b.empty()) return Rational(0);
  const auto& [pivot, pval] = *z.begin();
  auto it = b.find(pivot);
  return it == b.end() ? Rational(0) : it->second / pval;
}

}  // namespace

HeisenbergDetection detect_heisenberg(const Algebra& A) {
  HeisenbergDetection out;
  if (!is_lie(A)) {
    out.reason = HeisenbergReject::NotLie;
    return out;
  }
  const Subspace Z = center(A);
  const Subspace D = derived_subspace(A);
  if (Z.dim() != 1 || !(D == Z)) {
    out.reason = HeisenbergReject::CenterDim;
    return out;
  }

  const std::size_t n = A.dim();
  const Vec z = D.basis().front();

  // Complement of Z: the standard basis vectors away from Z's pivot column.
  std::set<std::size_t> pivots;
  for (const Vec& row : Z.basis()) pivots.insert(row.begin()->first);
  std::list<Vec> W;
  for (std::size_t c = 0; c < n; ++c)
    if (!pivots.count(c)) W.push_back(Vec{{c, Rational(1)}});

  // Exact symplectic Gram-Schmidt on the induced form omega(u, w), where
  // [u, w] = omega(u, w) * z.
  std::vector<Vec> us, vs;
  while (!W.empty()) {
    Vec u = std::move(W.front());
    W.pop_front();
    auto wit = W.begin();
    Rational c;
    for (; wit != W.end(); ++wit) {
      c = pairing(A, z, u, *wit);
      if (!c.is_zero()) break;
    }
    if (wit == W.end()) {
      out.reason = HeisenbergReject::DegenerateForm;
      return out;
    }
    Vec v = std::move(*wit);
    W.erase(wit);
    vec_scale(v, c.inverse());  // omega(u, v) = 1
    for (Vec& w : W) {
      vec_axpy(w, pairing(A, z, v, w), u);
      vec_axpy(w, -pairing(A, z, u, w), v);
    }
    us.push_back(std::move(u));
    vs.push_back(std::move(v));
  }

  const std::size_t k = us.size();
  Matrix M(n, n);
  auto set_col = [&](std::size_t col, const Vec& v) {
    for (const auto& [r, val] : v) M.at(r, col) = val;
  };
  set_col(0, z);
  for (std::size_t i = 0; i < k; ++i) {
    set_col(1 + i, us[i]);
    set_col(1 + k + i, vs[i]);
  }

  const HeisenbergBasis hb = heisenberg_basis(k);
  if (!A.change_of_basis(M, hb.labels).same_table(make_heisenberg(n)))
    throw Error("internal: symplectic reduction produced a non-canonical table");
  out.match = HeisenbergMatch{k, std::move(M)};
  return out;
}

}  // namespace leibniz
