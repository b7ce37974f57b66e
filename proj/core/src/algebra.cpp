#include "leibniz/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "leibniz/errors.hpp"
#include "leibniz/parallel.hpp"

namespace leibniz {

Algebra::Algebra(std::string name, std::vector<std::string> basis_labels)
    : m_name(std::move(name)), m_labels(std::move(basis_labels)) {
  for (std::size_t i = 0; i < m_labels.size(); ++i) {
    if (!m_index.emplace(m_labels[i], i).second)
      throw Error("Algebra: duplicate basis label '" + m_labels[i] + "'");
  }
  m_table.assign(m_labels.size() * m_labels.size(), Vec{});
}

const std::string& Algebra::label(std::size_t i) const {
  if (i >= m_labels.size())
    throw BadDimensionError("Algebra: basis index out of range");
  return m_labels[i];
}

std::size_t Algebra::index_of(const std::string& label) const {
  auto it = m_index.find(label);
  if (it == m_index.end())
    throw UnknownLabelError("no basis element labelled '" + label + "' in '" +
                            m_name + "'");
  return it->second;
}

void Algebra::set_product(std::size_t i, std::size_t j, Vec value) {
  const std::size_t n = dim();
  if (i >= n || j >= n)
    throw BadDimensionError("Algebra::set_product: index out of range");
  for (const auto& [idx, coeff] : value) {
    if (idx >= n)
      throw BadDimensionError(
          "Algebra::set_product: product coordinate out of range");
    if (coeff.is_zero())
      throw Error("Algebra::set_product: explicit zero coefficient");
  }
  m_table[i * n + j] = std::move(value);
}

const Vec& Algebra::product(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  if (i >= n || j >= n)
    throw BadDimensionError("Algebra::product: index out of range");
  return m_table[i * n + j];
}

Vec Algebra::bracket(const Vec& a, const Vec& b) const {
  Vec out;
  for (const auto& [i, ai] : a)
    for (const auto& [j, bj] : b) vec_axpy(out, ai * bj, product(i, j));
  return out;
}

bool Algebra::same_table(const Algebra& o) const {
  return m_labels == o.m_labels && m_table == o.m_table;
}

Algebra Algebra::change_of_basis(const Matrix& P,
                                 std::vector<std::string> new_labels) const {
  const std::size_t n = dim();
  if (P.rows() != n || P.cols() != n)
    throw BadDimensionError("change_of_basis: matrix shape mismatch");
  if (new_labels.size() != n)
    throw BadDimensionError("change_of_basis: wrong number of labels");
  const Matrix Pinv = P.inverse();
  std::vector<Vec> cols(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (!P.at(i, j).is_zero()) cols[j][i] = P.at(i, j);
  Algebra out(m_name, std::move(new_labels));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      out.set_product(a, b, Pinv.apply(bracket(cols[a], cols[b])));
  return out;
}

Vec leibniz_residual(const Algebra& A, std::size_t i, std::size_t j,
                     std::size_t k) {
  Vec res = A.bracket(A.product(i, j), Vec{{k, Rational(1)}});
  vec_axpy(res, Rational(-1),
           A.bracket(A.product(i, k), Vec{{j, Rational(1)}}));
  vec_axpy(res, Rational(-1),
           A.bracket(Vec{{i, Rational(1)}}, A.product(j, k)));
  return res;
}

CheckReport leibniz_check(const Algebra& A) {
  const std::size_t n = A.dim();
  const std::size_t total = n * n * n;
  const std::size_t workers =
      total == 0 ? 1 : std::min(thread_budget(), total);
  std::vector<std::vector<std::pair<std::size_t, CheckViolation>>> found(
      workers == 0 ? 1 : workers);
  std::vector<std::uint64_t> counts(found.size(), 0);

  parallel_blocks(0, total, [&](std::size_t lo, std::size_t hi,
                                std::size_t w) {
    std::uint64_t local = 0;
    for (std::size_t t = lo; t < hi; ++t) {
      const std::size_t i = t / (n * n);
      const std::size_t j = (t / n) % n;
      const std::size_t k = t % n;
      Vec res = leibniz_residual(A, i, j, k);
      ++local;
      if (!res.empty()) {
        found[w].push_back({t, CheckViolation{i, j, k, std::move(res)}});
        // Any violation after this block's first max_violations is preceded
        // by at least that many, so it can never make the merged report.
        if (found[w].size() >= CheckReport::max_violations) break;
      }
    }
    counts[w] = local;
  });

  CheckReport rep;
  // A worker that stopped early leaves later triples of its block unchecked;
  // count what was actually evaluated.
  for (std::uint64_t c : counts) rep.checked += c;
  std::vector<std::pair<std::size_t, CheckViolation>> merged;
  for (auto& f : found)
    for (auto& v : f) merged.push_back(std::move(v));
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (merged.size() > CheckReport::max_violations)
    merged.resize(CheckReport::max_violations);
  for (auto& v : merged) rep.violations.push_back(std::move(v.second));
  rep.ok = rep.violations.empty();
  return rep;
}

bool is_lie(const Algebra& A) {
  const std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec sum = A.product(i, j);
      vec_axpy(sum, Rational(1), A.product(j, i));
      if (i == j) {
        // [x,x] must itself vanish; the polarized sum double-counts it.
        if (!A.product(i, i).empty()) return false;
      } else if (!sum.empty()) {
        return false;
      }
    }
  return leibniz_check(A).ok;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& gens) {
  Matrix M(gens.size(), ambient_dim);
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (const auto& [idx, coeff] : gens[r]) {
      if (idx >= ambient_dim)
        throw BadDimensionError("Subspace::span: coordinate out of range");
      M.at(r, idx) = coeff;
    }
  RrefResult red = rref(std::move(M));
  Subspace out(ambient_dim);
  for (std::size_t r = 0; r < red.rank; ++r) {
    Vec row;
    for (std::size_t c = 0; c < ambient_dim; ++c)
      if (!red.R.at(r, c).is_zero()) row[c] = red.R.at(r, c);
    out.m_rows.push_back(std::move(row));
  }
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  Vec out = v;
  for (const auto& row : m_rows) {
    const std::size_t pivot = row.begin()->first;  // leading 1 of an RREF row
    auto it = out.find(pivot);
    if (it == out.end()) continue;
    vec_axpy(out, -it->second, row);
  }
  return out;
}

bool Subspace::contains(const Vec& v) const { return reduce(v).empty(); }

bool Subspace::contains(const Subspace& o) const {
  if (o.m_ambient != m_ambient) return false;
  for (const auto& row : o.m_rows)
    if (!contains(row)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (o.m_ambient != m_ambient)
    throw BadDimensionError("Subspace::sum: ambient dimensions differ");
  std::vector<Vec> gens = m_rows;
  gens.insert(gens.end(), o.m_rows.begin(), o.m_rows.end());
  return span(m_ambient, gens);
}

Subspace squares_span(const Algebra& A) {
  const std::size_t n = A.dim();
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(A.product(i, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec s = A.product(i, j);
      vec_axpy(s, Rational(1), A.product(j, i));
      gens.push_back(std::move(s));
    }
  return Subspace::span(n, gens);
}

Subspace squares_ideal(const Algebra& A) {
  const std::size_t n = A.dim();
  Subspace current = squares_span(A);
  for (;;) {
    std::vector<Vec> gens = current.basis();
    for (const auto& row : current.basis()) {
      for (std::size_t j = 0; j < n; ++j) {
        Vec ej{{j, Rational(1)}};
        gens.push_back(A.bracket(row, ej));
        gens.push_back(A.bracket(ej, row));
      }
    }
    Subspace next = Subspace::span(n, gens);
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

bool is_ideal(const Algebra& A, const Subspace& S) {
  if (S.ambient() != A.dim()) return false;
  for (const auto& row : S.basis())
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Vec ej{{j, Rational(1)}};
      if (!S.contains(A.bracket(row, ej))) return false;
      if (!S.contains(A.bracket(ej, row))) return false;
    }
  return true;
}

Algebra quotient(const Algebra& A, const Subspace& I) {
  if (!is_ideal(A, I))
    throw NotAnIdealError("quotient: subspace is not a two-sided ideal of '" +
                          A.name() + "'");
  const std::size_t n = A.dim();
  std::vector<bool> is_pivot(n, false);
  for (const auto& row : I.basis()) is_pivot[row.begin()->first] = true;
  std::vector<std::size_t> coords;  // surviving coordinates, increasing
  std::vector<std::string> labels;
  std::map<std::size_t, std::size_t> to_new;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    to_new[c] = coords.size();
    coords.push_back(c);
    labels.push_back(A.label(c) + "~");
  }
  auto project = [&](const Vec& v) {
    Vec red = I.reduce(v);  // supported on non-pivot coordinates only
    Vec out;
    for (const auto& [idx, coeff] : red) out[to_new.at(idx)] = coeff;
    return out;
  };
  Algebra Q(A.name() + "/sq", std::move(labels));
  for (std::size_t a = 0; a < coords.size(); ++a)
    for (std::size_t b = 0; b < coords.size(); ++b)
      Q.set_product(a, b,
                    project(A.product(coords[a], coords[b])));
  return Q;
}

namespace {

/// Nullspace of the linear conditions selected by `sides`:
/// left  — sum_i a_i [b_i, b_j] = 0 for all j,
/// right — sum_i a_i [b_j, b_i] = 0 for all j.
Subspace annihilator_of(const Algebra& A, bool left, bool right) {
  const std::size_t n = A.dim();
  const std::size_t blocks = (left ? 1 : 0) + (right ? 1 : 0);
  Matrix M(blocks * n * n, n);
  std::size_t base = 0;
  if (left) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [m, coeff] : A.product(i, j))
          M.at(base + j * n + m, i) = coeff;
    base += n * n;
  }
  if (right) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [m, coeff] : A.product(j, i))
          M.at(base + j * n + m, i) = coeff;
  }
  return Subspace::span(n, M.nullspace());
}

}  // namespace

Subspace left_annihilator(const Algebra& A) {
  return annihilator_of(A, true, false);
}

Subspace right_annihilator(const Algebra& A) {
  return annihilator_of(A, false, true);
}

Subspace center(const Algebra& A) { return annihilator_of(A, true, true); }

Subspace derived_subspace(const Algebra& A) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) gens.push_back(A.product(i, j));
  return Subspace::span(A.dim(), gens);
}

std::vector<std::size_t> lower_central_dims(const Algebra& A) {
  const std::size_t n = A.dim();
  std::vector<Vec> full;
  for (std::size_t i = 0; i < n; ++i) full.push_back(Vec{{i, Rational(1)}});
  Subspace S = Subspace::span(n, full);
  std::vector<std::size_t> dims{S.dim()};
  for (;;) {
    std::vector<Vec> gens;
    for (const auto& row : S.basis())
      for (std::size_t j = 0; j < n; ++j)
        gens.push_back(A.bracket(row, Vec{{j, Rational(1)}}));
    Subspace next = Subspace::span(n, gens);
    if (next.dim() == dims.back()) break;
    dims.push_back(next.dim());
    S = std::move(next);
  }
  return dims;
}

std::string Fingerprint::str() const {
  std::ostringstream os;
  os << "dim=" << dim << " lcs=[";
  for (std::size_t i = 0; i < lower_central.size(); ++i)
    os << (i ? "," : "") << lower_central[i];
  os << "] annL=" << left_annihilator_dim << " annR=" << right_annihilator_dim
     << " center=" << center_dim << " sq=" << squares_span_dim
     << " sqIdeal=" << squares_ideal_dim;
  return os.str();
}

Fingerprint fingerprint(const Algebra& A) {
  Fingerprint f;
  f.dim = A.dim();
  f.lower_central = lower_central_dims(A);
  f.left_annihilator_dim = left_annihilator(A).dim();
  f.right_annihilator_dim = right_annihilator(A).dim();
  f.center_dim = center(A).dim();
  f.squares_span_dim = squares_span(A).dim();
  f.squares_ideal_dim = squares_ideal(A).dim();
  return f;
}

Algebra direct_sum(const std::vector<Algebra>& parts,
                   const std::string& name) {
  if (parts.empty()) throw Error("direct_sum: no parts");
  if (parts.size() == 1) {
    Algebra out = parts[0];
    out.set_name(name);
    return out;
  }
  std::vector<std::string> labels;
  std::vector<std::size_t> offsets;
  std::size_t off = 0;
  for (std::size_t s = 0; s < parts.size(); ++s) {
    offsets.push_back(off);
    for (const auto& l : parts[s].basis())
      labels.push_back(l + "@" + std::to_string(s + 1));
    off += parts[s].dim();
  }
  Algebra out(name, std::move(labels));
  for (std::size_t s = 0; s < parts.size(); ++s) {
    const Algebra& P = parts[s];
    for (std::size_t i = 0; i < P.dim(); ++i)
      for (std::size_t j = 0; j < P.dim(); ++j) {
        Vec v;
        for (const auto& [idx, coeff] : P.product(i, j))
          v[offsets[s] + idx] = coeff;
        out.set_product(offsets[s] + i, offsets[s] + j, std::move(v));
      }
  }
  return out;
}

}  // namespace leibniz
