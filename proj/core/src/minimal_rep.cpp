#include "leibniz/minimal_rep.hpp"

#include <array>
#include <sstream>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

bool table_equal(const Algebra& A, const Algebra& B) {
  if (A.dim() != B.dim()) return false;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j)
      if (!(A.product(i, j) == B.product(i, j))) return false;
  return true;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      out.at(r, c) = a.at(r, c) - b.at(r, c);
  return out;
}

void mat_axpy(Matrix& dst, const Rational& k, const Matrix& src) {
  for (std::size_t r = 0; r < dst.rows(); ++r)
    for (std::size_t c = 0; c < dst.cols(); ++c)
      dst.at(r, c) += k * src.at(r, c);
}

}  // namespace

MinFaithfulModule build_min_rep(std::size_t m) {
  if (m < 1) throw BadDimensionError("at least one pair is required");
  const std::size_t n = m + 2;  // module dimension

  MinFaithfulModule M;
  M.m = m;

  std::vector<std::string> hlabels;
  for (std::size_t i = 1; i <= m; ++i) hlabels.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= m; ++i) hlabels.push_back("y" + std::to_string(i));
  hlabels.push_back("z");
  M.heisenberg = Algebra("H" + std::to_string(2 * m + 1), hlabels);
  for (std::size_t i = 1; i <= m; ++i) {
    M.heisenberg.set_product(m + i - 1, i - 1, Vec{{2 * m, Rational(1)}});
    M.heisenberg.set_product(i - 1, m + i - 1, Vec{{2 * m, Rational(-1)}});
  }

  for (std::size_t s = 1; s <= n; ++s)
    M.module_labels.push_back("e" + std::to_string(s));

  for (std::size_t i = 1; i <= m; ++i) {
    Matrix mx(n, n);
    mx.at(0, i) = Rational(1);  // E_{1,i+1}
    M.phi["x" + std::to_string(i)] = std::move(mx);
    Matrix my(n, n);
    my.at(i, n - 1) = Rational(1);  // E_{i+1,m+2}
    M.phi["y" + std::to_string(i)] = std::move(my);
  }
  Matrix mz(n, n);
  mz.at(0, n - 1) = Rational(1);  // E_{1,m+2}
  M.phi["z"] = std::move(mz);

  std::vector<std::string> clabels = hlabels;
  for (const std::string& l : M.module_labels) clabels.push_back(l);
  Algebra C("minrep-m" + std::to_string(m), clabels);
  const std::size_t z = 2 * m;
  auto E = [&](std::size_t s) { return 2 * m + s; };  // e_s, 1-based s
  for (std::size_t i = 1; i <= m; ++i) {
    C.set_product(m + i - 1, i - 1, Vec{{z, Rational(1)}});
    C.set_product(i - 1, m + i - 1, Vec{{z, Rational(-1)}});
    C.set_product(E(i + 1), i - 1, Vec{{E(1), Rational(1)}});       // [e_{i+1}, x_i] = e1
    C.set_product(E(m + 2), m + i - 1, Vec{{E(i + 1), Rational(1)}});  // [e_{m+2}, y_i] = e_{i+1}
  }
  C.set_product(E(m + 2), z, Vec{{E(1), Rational(1)}});  // [e_{m+2}, z] = e1
  M.combined = std::move(C);
  return M;
}

bool matrix_law_holds(const MinFaithfulModule& M) {
  const Algebra& H = M.heisenberg;
  const std::size_t n = M.m + 2;
  auto phi_of = [&](const Vec& v) {
    Matrix out(n, n);
    for (const auto& [coord, c] : v) mat_axpy(out, c, M.phi.at(H.label(coord)));
    return out;
  };
  for (std::size_t u = 0; u < H.dim(); ++u)
    for (std::size_t v = 0; v < H.dim(); ++v) {
      const Matrix lhs = phi_of(H.product(u, v));
      const Matrix& pu = M.phi.at(H.label(u));
      const Matrix& pv = M.phi.at(H.label(v));
      if (!(lhs == mat_sub(pv * pu, pu * pv))) return false;
    }
  return true;
}

std::size_t general_family_param_count(std::size_t m) {
  if (m < 2) throw BadDimensionError("the general family needs m >= 2");
  std::size_t alpha = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    alpha += m;  // s = 1
    for (std::size_t s = 2; s <= m + 1; ++s)
      for (std::size_t j = 1; j <= m; ++j)
        if (j <= s - 1) ++alpha;  // canonical rep of alpha_{i,j}^{k+1} = alpha_{i,k}^{j+1}
  }
  std::size_t nu = 0;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      if (j == i) continue;
      ++nu;  // s = 1
      for (std::size_t s = 2; s <= m + 1; ++s) {
        const std::size_t k = s - 1;
        if (k == i || j <= k) ++nu;  // k = i slots are unrelated; else j <= k canonical
      }
    }
  return alpha + nu + m * (m - 1) /*gamma*/ + m /*delta*/ + 1 /*tau*/ +
         m * m /*beta*/ + (m - 1) /*eps*/;
}

namespace {

template <typename Map, typename Key>
Rational get0(const Map& m, const Key& k) {
  auto it = m.find(k);
  return it == m.end() ? Rational(0) : it->second;
}

void check_general_keys(const GeneralFamilyParams& p) {
  const std::size_t m = p.m;
  for (const auto& [key, val] : p.alpha) {
    const auto& [i, j, s] = key;
    if (i < 1 || i > m || j < 1 || j > m || s < 1 || s > m + 1)
      throw BadDimensionError("alpha key out of range");
  }
  for (const auto& [key, val] : p.nu) {
    const auto& [i, j, s] = key;
    if (i < 1 || i > m || j < 1 || j > m || i == j || s < 1 || s > m + 1)
      throw BadDimensionError("nu key out of range");
  }
  for (const auto& [key, val] : p.gamma) {
    if (key.first < 1 || key.first > m || key.second < 1 || key.second > m ||
        key.first == key.second)
      throw BadDimensionError("gamma key out of range");
  }
  for (const auto& [key, val] : p.beta)
    if (key.first < 1 || key.first > m || key.second < 1 || key.second > m)
      throw BadDimensionError("beta key out of range");
  for (const auto& [key, val] : p.delta)
    if (key < 1 || key > m) throw BadDimensionError("delta key out of range");
  for (const auto& [key, val] : p.eps)
    if (key < 2 || key > m) throw BadDimensionError("eps key out of range");
}

}  // namespace

Algebra build_general_family(const GeneralFamilyParams& p) {
  const std::size_t m = p.m;
  if (m < 2)
    throw BadDimensionError(
        "the general family needs m >= 2; one pair has the nine-parameter family");
  check_general_keys(p);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      for (std::size_t k = 1; k <= m; ++k) {
        if (get0(p.alpha, std::make_tuple(i, j, k + 1)) !=
            get0(p.alpha, std::make_tuple(i, k, j + 1)))
          throw SymmetryViolationError(
              "alpha_{i,j}^{k+1} = alpha_{i,k}^{j+1} violated at i=" +
              std::to_string(i) + ", j=" + std::to_string(j) +
              ", k=" + std::to_string(k));
        if (j != i && k != i &&
            get0(p.nu, std::make_tuple(i, j, k + 1)) !=
                get0(p.nu, std::make_tuple(i, k, j + 1)))
          throw SymmetryViolationError(
              "nu_{i,j}^{k+1} = nu_{i,k}^{j+1} violated at i=" +
              std::to_string(i) + ", j=" + std::to_string(j) +
              ", k=" + std::to_string(k));
      }

  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= m; ++i) labels.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= m; ++i) labels.push_back("y" + std::to_string(i));
  labels.push_back("z");
  for (std::size_t s = 1; s <= m + 2; ++s)
    labels.push_back("e" + std::to_string(s));
  Algebra A("general-family-m" + std::to_string(m), labels);

  const std::size_t z = 2 * m;
  auto X = [&](std::size_t i) { return i - 1; };
  auto Y = [&](std::size_t i) { return m + i - 1; };
  auto E = [&](std::size_t s) { return 2 * m + s; };
  auto put = [&](std::size_t l, std::size_t r, Vec v) {
    for (auto it = v.begin(); it != v.end();)
      it = it->second.is_zero() ? v.erase(it) : std::next(it);
    if (!v.empty()) A.set_product(l, r, std::move(v));
  };

  for (std::size_t i = 1; i <= m; ++i) {
    put(E(i + 1), X(i), Vec{{E(1), Rational(1)}});
    put(E(m + 2), Y(i), Vec{{E(i + 1), Rational(1)}});
  }
  put(E(m + 2), z, Vec{{E(1), Rational(1)}});

  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      Vec v;
      for (std::size_t s = 1; s <= m + 1; ++s)
        v[E(s)] = get0(p.alpha, std::make_tuple(i, j, s));
      put(X(i), X(j), std::move(v));
    }
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      if (i == j) {
        Vec v{{z, Rational(-1)}};
        v[E(1)] = get0(p.delta, i);
        v[E(2)] = p.tau;
        for (std::size_t s = 2; s <= m; ++s)
          v[E(s + 1)] = get0(p.nu, std::make_tuple(std::size_t(1), s,
                                                   std::size_t(2)));
        put(X(i), Y(i), std::move(v));
      } else {
        put(X(i), Y(j), Vec{{E(1), get0(p.gamma, std::make_pair(i, j))}});
      }
    }
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      put(Y(i), Y(j), Vec{{E(1), get0(p.beta, std::make_pair(i, j))}});
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      if (i == j) {
        Vec v{{z, Rational(1)}};
        if (i != 1) {
          v[E(2)] = get0(p.nu, std::make_tuple(i, std::size_t(1), i + 1)) - p.tau;
          v[E(i + 1)] = v[E(i + 1)] + get0(p.eps, i);
          for (std::size_t s = 2; s <= m; ++s) {
            if (s == i) continue;
            v[E(s + 1)] =
                v[E(s + 1)] +
                get0(p.nu, std::make_tuple(i, s, i + 1)) -
                get0(p.nu, std::make_tuple(std::size_t(1), s, std::size_t(2)));
          }
        }
        put(Y(i), X(i), std::move(v));
      } else {
        Vec v;
        for (std::size_t s = 1; s <= m + 1; ++s)
          v[E(s)] = get0(p.nu, std::make_tuple(i, j, s));
        put(Y(i), X(j), std::move(v));
      }
    }
  put(z, X(1), Vec{{E(1), p.tau}});
  for (std::size_t i = 2; i <= m; ++i)
    put(z, X(i), Vec{{E(1), get0(p.nu, std::make_tuple(std::size_t(1), i,
                                                       std::size_t(2)))}});
  return A;
}

GeneralFamilyParams random_general_params(std::size_t m, Rng& rng) {
  if (m < 2) throw BadDimensionError("the general family needs m >= 2");
  GeneralFamilyParams p;
  p.m = m;
  auto rnd = [&] { return rng.rational(-5, 5); };
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= m; ++j) p.alpha[{i, j, 1}] = rnd();
    for (std::size_t k = 1; k <= m; ++k)
      for (std::size_t j = 1; j <= k; ++j) {
        const Rational v = rnd();
        p.alpha[{i, j, k + 1}] = v;
        p.alpha[{i, k, j + 1}] = v;
      }
  }
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      if (j == i) continue;
      p.nu[{i, j, 1}] = rnd();
      p.nu[{i, j, i + 1}] = rnd();  // k = i: unrelated slot
      for (std::size_t k = j; k <= m; ++k) {
        if (k == i) continue;
        const Rational v = rnd();
        p.nu[{i, j, k + 1}] = v;
        p.nu[{i, k, j + 1}] = v;
      }
    }
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      if (i != j) p.gamma[{i, j}] = rnd();
      p.beta[{i, j}] = rnd();
    }
  for (std::size_t i = 1; i <= m; ++i) p.delta[i] = rnd();
  p.tau = rnd();
  for (std::size_t i = 2; i <= m; ++i) p.eps[i] = rnd();
  return p;
}

GeneralFamilyParams read_general_family_params(const Algebra& A,
                                               std::size_t m) {
  if (m < 2) throw BadDimensionError("the general family needs m >= 2");
  if (A.dim() != 3 * m + 3)
    throw InconsistentError("table dimension does not match the family");
  auto X = [&](std::size_t i) { return i - 1; };
  auto Y = [&](std::size_t i) { return m + i - 1; };
  auto E = [&](std::size_t s) { return 2 * m + s; };
  auto coord = [&](const Vec& v, std::size_t c) {
    auto it = v.find(c);
    return it == v.end() ? Rational(0) : it->second;
  };

  GeneralFamilyParams p;
  p.m = m;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      const Vec& xx = A.product(X(i), X(j));
      for (std::size_t s = 1; s <= m + 1; ++s) {
        const Rational v = coord(xx, E(s));
        if (!v.is_zero()) p.alpha[{i, j, s}] = v;
      }
      if (i != j) {
        const Rational g = coord(A.product(X(i), Y(j)), E(1));
        if (!g.is_zero()) p.gamma[{i, j}] = g;
        const Vec& yx = A.product(Y(i), X(j));
        for (std::size_t s = 1; s <= m + 1; ++s) {
          const Rational v = coord(yx, E(s));
          if (!v.is_zero()) p.nu[{i, j, s}] = v;
        }
      }
      const Rational b = coord(A.product(Y(i), Y(j)), E(1));
      if (!b.is_zero()) p.beta[{i, j}] = b;
    }
  for (std::size_t i = 1; i <= m; ++i) {
    const Rational d = coord(A.product(X(i), Y(i)), E(1));
    if (!d.is_zero()) p.delta[i] = d;
  }
  p.tau = coord(A.product(2 * m, X(1)), E(1));
  for (std::size_t i = 2; i <= m; ++i) {
    const Rational e = coord(A.product(Y(i), X(i)), E(i + 1));
    if (!e.is_zero()) p.eps[i] = e;
  }

  Algebra rebuilt;
  try {
    rebuilt = build_general_family(p);
  } catch (const SymmetryViolationError&) {
    throw InconsistentError("table does not fit the general family shape");
  }
  if (!table_equal(rebuilt, A))
    throw InconsistentError("table does not fit the general family shape");
  return p;
}

Matrix general_family_cleanup_matrix(const Algebra& A, std::size_t m) {
  if (m < 2) throw BadDimensionError("the general family needs m >= 2");
  if (A.dim() != 3 * m + 3)
    throw InconsistentError("table dimension does not match the family");
  auto X = [&](std::size_t i) { return i - 1; };
  auto Y = [&](std::size_t i) { return m + i - 1; };
  auto E = [&](std::size_t s) { return 2 * m + s; };
  const std::size_t z = 2 * m;
  auto coord = [&](const Vec& v, std::size_t c) {
    auto it = v.find(c);
    return it == v.end() ? Rational(0) : it->second;
  };
  Matrix M = Matrix::identity(3 * m + 3);
  for (std::size_t i = 1; i <= m; ++i) {
    M.at(E(m + 2), X(i)) = -coord(A.product(X(i), z), E(1));  // x_i' = x_i - eta_i e_{m+2}
    M.at(E(m + 2), Y(i)) = -coord(A.product(Y(i), z), E(1));  // - theta_i e_{m+2}
    if (i >= 2)
      M.at(E(i + 1), Y(i)) = -coord(A.product(Y(i), X(i)), E(1));  // - eps_i^1 e_{i+1}
  }
  return M;
}

bool ParamFamilyM1::operator==(const ParamFamilyM1& o) const {
  return alpha1 == o.alpha1 && alpha2 == o.alpha2 && alpha3 == o.alpha3 &&
         beta1 == o.beta1 && beta2 == o.beta2 && delta1 == o.delta1 &&
         delta2 == o.delta2 && eta1 == o.eta1 && theta1 == o.theta1;
}

std::string ParamFamilyM1::str() const {
  std::ostringstream out;
  out << "L(" << alpha1.str() << ',' << alpha2.str() << ',' << alpha3.str()
      << ',' << beta1.str() << ',' << beta2.str() << ',' << delta1.str() << ','
      << delta2.str() << ',' << eta1.str() << ',' << theta1.str() << ')';
  return out.str();
}

Algebra build_L(const ParamFamilyM1& p) {
  Algebra A(p.str(), {"x", "y", "z", "e1", "e2", "e3"});
  auto put = [&](std::size_t l, std::size_t r, Vec v) {
    for (auto it = v.begin(); it != v.end();)
      it = it->second.is_zero() ? v.erase(it) : std::next(it);
    if (!v.empty()) A.set_product(l, r, std::move(v));
  };
  put(4, 0, {{3, Rational(1)}});  // [e2, x] = e1
  put(5, 1, {{4, Rational(1)}});  // [e3, y] = e2
  put(5, 2, {{3, Rational(1)}});  // [e3, z] = e1
  put(0, 0, {{3, p.alpha1}, {4, p.alpha2}, {5, p.alpha3}});
  put(0, 1, {{2, Rational(-1)}, {3, p.delta1}, {4, p.delta2}});
  put(0, 2, {{3, p.eta1}, {4, p.alpha3}});
  put(1, 1, {{3, p.beta1}, {4, p.beta2}});
  put(1, 0, {{2, Rational(1)}});
  put(1, 2, {{3, p.theta1}});
  put(2, 0, {{3, p.delta2 - p.eta1}, {4, Rational(-2) * p.alpha3}});
  put(2, 1, {{3, p.beta2 - p.theta1}});
  return A;
}

Algebra build_L_residual(const ParamFamilyM1& p, const Rational& e3x) {
  Algebra A = build_L(p);
  if (!e3x.is_zero()) A.set_product(5, 0, Vec{{3, e3x}});
  return A;
}

AdmissibleChange AdmissibleChange::identity() {
  AdmissibleChange g;
  g.A1 = Rational(1);
  g.B2 = Rational(1);
  g.R3 = Rational(1);
  return g;
}

namespace {

const std::vector<std::string>& m1_labels() {
  static const std::vector<std::string> l = {"x", "y", "z", "e1", "e2", "e3"};
  return l;
}

/// Reads the nine coefficients off a table and verifies it has exactly the
/// family shape (module action, [y,x] = z and the derived z-rows included).
ParamFamilyM1 read_m1_params(const Algebra& A) {
  if (A.dim() != 6)
    throw InconsistentError("table dimension does not match the family");
  auto coord = [&](std::size_t l, std::size_t r, std::size_t c) {
    const Vec& v = A.product(l, r);
    auto it = v.find(c);
    return it == v.end() ? Rational(0) : it->second;
  };
  ParamFamilyM1 p;
  p.alpha1 = coord(0, 0, 3);
  p.alpha2 = coord(0, 0, 4);
  p.alpha3 = coord(0, 0, 5);
  p.delta1 = coord(0, 1, 3);
  p.delta2 = coord(0, 1, 4);
  p.eta1 = coord(0, 2, 3);
  p.beta1 = coord(1, 1, 3);
  p.beta2 = coord(1, 1, 4);
  p.theta1 = coord(1, 2, 3);
  if (!table_equal(build_L(p), A))
    throw InconsistentError("table does not fit the one-pair family shape");
  return p;
}

/// Like read_m1_params but tolerates the single extra product
/// [e3, x] = r e1 that the alpha3 != 0 pre-normalization produces when
/// alpha2 != 0; returns the nine coefficients together with r.
std::pair<ParamFamilyM1, Rational> read_m1_params_residual(const Algebra& A) {
  if (A.dim() != 6)
    throw InconsistentError("table dimension does not match the family");
  auto coord = [&](std::size_t l, std::size_t r, std::size_t c) {
    const Vec& v = A.product(l, r);
    auto it = v.find(c);
    return it == v.end() ? Rational(0) : it->second;
  };
  ParamFamilyM1 p;
  p.alpha1 = coord(0, 0, 3);
  p.alpha2 = coord(0, 0, 4);
  p.alpha3 = coord(0, 0, 5);
  p.delta1 = coord(0, 1, 3);
  p.delta2 = coord(0, 1, 4);
  p.eta1 = coord(0, 2, 3);
  p.beta1 = coord(1, 1, 3);
  p.beta2 = coord(1, 1, 4);
  p.theta1 = coord(1, 2, 3);
  const Rational r = coord(5, 0, 3);
  if (!table_equal(build_L_residual(p, r), A))
    throw InconsistentError(
        "table does not fit the one-pair family shape with an [e3,x] residual");
  return {p, r};
}

Vec m1_x_col(const AdmissibleChange& g) {
  Vec v;
  if (!g.A1.is_zero()) v[0] = g.A1;
  if (!g.A3.is_zero()) v[2] = g.A3;
  if (!g.P1.is_zero()) v[3] = g.P1;
  if (!g.P2.is_zero()) v[4] = g.P2;
  if (!g.P3.is_zero()) v[5] = g.P3;
  return v;
}

Vec m1_y_col(const AdmissibleChange& g) {
  Vec v;
  if (!g.B2.is_zero()) v[1] = g.B2;
  if (!g.B3.is_zero()) v[2] = g.B3;
  if (!g.Q1.is_zero()) v[3] = g.Q1;
  if (!g.Q2.is_zero()) v[4] = g.Q2;
  if (!g.Q3.is_zero()) v[5] = g.Q3;
  return v;
}

Matrix m1_matrix_from_cols(const std::array<Vec, 6>& cols) {
  Matrix M(6, 6);
  for (std::size_t c = 0; c < 6; ++c)
    for (const auto& [r, val] : cols[c]) M.at(r, c) = val;
  return M;
}

/// Case 2 column assembly from an explicit table (family shape, possibly
/// with the [e3,x] residual row): z' = [y',x'], e3' = [x',x'],
/// e2' = [e3',y'], e1' = [e2',x'].
Matrix assemble_case2_from(const Algebra& A, const AdmissibleChange& g) {
  if (g.A1.is_zero() || g.B2.is_zero())
    throw InadmissibleChangeError("case 2 requires A1 B2 != 0");
  const Vec xp = m1_x_col(g);
  const Vec yp = m1_y_col(g);
  const Vec zp = A.bracket(yp, xp);
  const Vec e3p = A.bracket(xp, xp);
  const Vec e2p = A.bracket(e3p, yp);
  const Vec e1p = A.bracket(e2p, xp);
  return m1_matrix_from_cols({xp, yp, zp, e1p, e2p, e3p});
}

}  // namespace

Matrix assemble_change_matrix_case1(const ParamFamilyM1& p,
                                    const AdmissibleChange& g) {
  if (!p.alpha3.is_zero())
    throw InadmissibleChangeError("case 1 requires alpha3 = 0");
  if (g.A1.is_zero() || g.B2.is_zero() || g.R3.is_zero())
    throw InadmissibleChangeError("case 1 requires A1 B2 R3 != 0");
  const Algebra A = build_L(p);
  const Vec xp = m1_x_col(g);
  const Vec yp = m1_y_col(g);
  const Vec zp = A.bracket(yp, xp);
  Vec e3p;
  if (!g.R1.is_zero()) e3p[3] = g.R1;
  const Rational R2 = -g.A3 * g.R3 / g.A1;
  if (!R2.is_zero()) e3p[4] = R2;
  e3p[5] = g.R3;
  const Vec e2p = A.bracket(e3p, yp);
  const Vec e1p = A.bracket(e2p, xp);
  return m1_matrix_from_cols({xp, yp, zp, e1p, e2p, e3p});
}

Matrix assemble_change_matrix_case2(const ParamFamilyM1& p,
                                    const AdmissibleChange& g) {
  if (!p.alpha1.is_zero() || !p.alpha2.is_zero() || !p.alpha3.is_one())
    throw InadmissibleChangeError(
        "case 2 requires the pre-normalized tuple (alpha1, alpha2, alpha3) = (0, 0, 1)");
  return assemble_case2_from(build_L(p), g);
}

ParamFamilyM1 transform_params_case1(const ParamFamilyM1& p,
                                     const AdmissibleChange& g) {
  const Matrix M = assemble_change_matrix_case1(p, g);
  return read_m1_params(build_L(p).change_of_basis(M, m1_labels()));
}

ParamFamilyM1 transform_params_case2(const ParamFamilyM1& p,
                                     const AdmissibleChange& g) {
  const Matrix M = assemble_change_matrix_case2(p, g);
  return read_m1_params(build_L(p).change_of_basis(M, m1_labels()));
}

Matrix case2_prenormalize_matrix(const ParamFamilyM1& p) {
  if (p.alpha3.is_zero())
    throw InadmissibleChangeError("pre-normalization requires alpha3 != 0");
  const Algebra A = build_L(p);
  const Vec x{{0, Rational(1)}}, y{{1, Rational(1)}}, z{{2, Rational(1)}};
  const Vec e3p = A.bracket(x, x);
  const Vec e2p = A.bracket(e3p, y);
  const Vec e1p = A.bracket(e2p, x);
  return m1_matrix_from_cols({x, y, z, e1p, e2p, e3p});
}

Case2Prenormalized case2_prenormalize(const ParamFamilyM1& p) {
  const Matrix M = case2_prenormalize_matrix(p);
  auto [q, r] = read_m1_params_residual(build_L(p).change_of_basis(M, m1_labels()));
  return {q, r};
}

bool NullityPattern::operator==(const NullityPattern& o) const {
  return case_tag == o.case_tag && alpha2_nz == o.alpha2_nz &&
         beta1_nz == o.beta1_nz && eta_nz == o.eta_nz && theta_nz == o.theta_nz;
}

std::string NullityPattern::str() const {
  std::ostringstream out;
  out << "case " << case_tag << ": ";
  if (case_tag == 1) out << "alpha2" << (alpha2_nz ? "!=0" : "=0") << ", ";
  out << "beta1" << (beta1_nz ? "!=0" : "=0") << ", eta1-delta2"
      << (eta_nz ? "!=0" : "=0") << ", theta1-beta2"
      << (theta_nz ? "!=0" : "=0");
  return out.str();
}

NullityPattern nullity_pattern(const ParamFamilyM1& p) {
  NullityPattern n;
  n.case_tag = p.alpha3.is_zero() ? 1 : 2;
  if (n.case_tag == 1) n.alpha2_nz = !p.alpha2.is_zero();
  n.beta1_nz = !p.beta1.is_zero();
  n.eta_nz = !(p.eta1 - p.delta2).is_zero();
  n.theta_nz = !(p.theta1 - p.beta2).is_zero();
  return n;
}

std::string ClassEntry::name() const {
  if (!has_lambda) return rep.str();
  std::ostringstream out;
  out << "L(" << rep.alpha1.str() << ',' << rep.alpha2.str() << ','
      << rep.alpha3.str() << ',' << rep.beta1.str() << ',' << rep.beta2.str()
      << ',' << rep.delta1.str() << ',' << rep.delta2.str() << ','
      << rep.eta1.str() << ",lambda)";
  return out.str();
}

ParamFamilyM1 ClassEntry::at(const Rational& lambda) const {
  if (!has_lambda) throw Error("class entry has no lambda slot");
  ParamFamilyM1 p = rep;
  p.theta1 = lambda;
  return p;
}

const std::vector<ClassEntry>& classify_list() {
  static const std::vector<ClassEntry> list = [] {
    auto tuple = [](long a1, long a2, long a3, long b1, long b2, long d1,
                    long d2, long h1, long t1) {
      ParamFamilyM1 p;
      p.alpha1 = Rational(a1);
      p.alpha2 = Rational(a2);
      p.alpha3 = Rational(a3);
      p.beta1 = Rational(b1);
      p.beta2 = Rational(b2);
      p.delta1 = Rational(d1);
      p.delta2 = Rational(d2);
      p.eta1 = Rational(h1);
      p.theta1 = Rational(t1);
      return p;
    };
    std::vector<ClassEntry> l;
    l.push_back({tuple(0, 1, 0, 1, 0, 0, 0, 1, 0), true});   // 0: lambda family
    l.push_back({tuple(0, 1, 0, 1, 0, 0, 0, 0, 1), false});  // 1
    l.push_back({tuple(0, 1, 0, 1, 0, 0, 0, 0, 0), false});  // 2
    l.push_back({tuple(0, 1, 0, 0, 0, 0, 0, 1, 0), true});   // 3: lambda family
    l.push_back({tuple(0, 1, 0, 0, 0, 0, 0, 0, 1), false});  // 4
    l.push_back({tuple(0, 1, 0, 0, 0, 0, 0, 0, 0), false});  // 5
    l.push_back({tuple(0, 0, 0, 1, 0, 0, 0, 1, 1), false});  // 6
    l.push_back({tuple(0, 0, 0, 1, 0, 0, 0, 1, 0), false});  // 7
    l.push_back({tuple(0, 0, 0, 1, 0, 0, 0, 0, 1), false});  // 8
    l.push_back({tuple(0, 0, 0, 1, 0, 0, 0, 0, 0), false});  // 9
    l.push_back({tuple(0, 0, 0, 0, 0, 0, 0, 1, 1), false});  // 10
    l.push_back({tuple(0, 0, 0, 0, 0, 0, 0, 1, 0), false});  // 11
    l.push_back({tuple(0, 0, 0, 0, 0, 0, 0, 0, 1), false});  // 12
    l.push_back({tuple(0, 0, 0, 0, 0, 0, 0, 0, 0), false});  // 13
    l.push_back({tuple(0, 0, 1, 1, 0, 0, 0, 1, 0), true});   // 14: lambda family
    l.push_back({tuple(0, 0, 1, 1, 0, 0, 0, 0, 1), false});  // 15
    l.push_back({tuple(0, 0, 1, 1, 0, 0, 0, 0, 0), false});  // 16
    l.push_back({tuple(0, 0, 1, 0, 0, 0, 0, 1, 1), false});  // 17
    l.push_back({tuple(0, 0, 1, 0, 0, 0, 0, 1, 0), false});  // 18
    l.push_back({tuple(0, 0, 1, 0, 0, 0, 0, 0, 1), false});  // 19
    l.push_back({tuple(0, 0, 1, 0, 0, 0, 0, 0, 0), false});  // 20
    return l;
  }();
  return list;
}

namespace {

struct NormalizeState {
  ParamFamilyM1 cur;
  Rational rho;  ///< coefficient of the carried [e3,x] = rho e1 residual
  Matrix witness = Matrix::identity(6);
  bool case2 = false;

  void apply(const AdmissibleChange& g) {
    if (case2) {
      if (!cur.alpha1.is_zero() || !cur.alpha2.is_zero() ||
          !cur.alpha3.is_one())
        throw InadmissibleChangeError(
            "case 2 requires the pre-normalized tuple (alpha1, alpha2, alpha3) = (0, 0, 1)");
      const Algebra A = build_L_residual(cur, rho);
      const Matrix M = assemble_case2_from(A, g);
      witness = witness * M;
      auto [q, r] = read_m1_params_residual(A.change_of_basis(M, m1_labels()));
      cur = q;
      rho = r;
    } else {
      const Matrix M = assemble_change_matrix_case1(cur, g);
      witness = witness * M;
      cur = transform_params_case1(cur, g);
    }
  }

  void scale(const Rational& A1, const Rational& B2, const Rational& R3) {
    AdmissibleChange g = AdmissibleChange::identity();
    g.A1 = A1;
    g.B2 = B2;
    g.R3 = R3;
    apply(g);
  }
};

}  // namespace

NormalForm normalize_m1(const ParamFamilyM1& p) {
  NormalizeState st;
  st.cur = p;
  st.case2 = !p.alpha3.is_zero();

  if (st.case2) {
    const Matrix M0 = case2_prenormalize_matrix(st.cur);
    st.witness = st.witness * M0;
    const Case2Prenormalized pre = case2_prenormalize(st.cur);
    st.cur = pre.params;
    st.rho = pre.residual_e3x;
  }

  // Sequential parameter kills (identity scales).
  {
    AdmissibleChange g = AdmissibleChange::identity();
    g.P3 = -st.cur.delta2;
    st.apply(g);
  }
  {
    AdmissibleChange g = AdmissibleChange::identity();
    g.Q3 = -st.cur.beta2;
    st.apply(g);
  }
  {
    AdmissibleChange g = AdmissibleChange::identity();
    g.Q2 = -st.cur.delta1;
    st.apply(g);
  }
  if (!st.case2) {
    AdmissibleChange g = AdmissibleChange::identity();
    g.P2 = -st.cur.alpha1;
    st.apply(g);
  }

  const Rational A = st.cur.alpha2, B = st.cur.beta1, H = st.cur.eta1,
                 T = st.cur.theta1;
  if (!st.cur.delta1.is_zero() || !st.cur.delta2.is_zero() ||
      !st.cur.beta2.is_zero() ||
      (!st.case2 && !st.cur.alpha1.is_zero()))
    throw Error("internal: parameter kills left a nonzero slot");

  NormalForm out;
  const Rational one(1);
  const bool a = !A.is_zero(), b = !B.is_zero(), h = !H.is_zero(),
             t = !T.is_zero();

  if (!st.case2) {
    if (a && b && h) {
      st.scale(A * B / (H * H), A * A * B / (H * H * H), A * B / H);
      out.entry_index = 0;
      out.lambda = st.cur.theta1;
    } else if (a && b && !h && t) {
      const Rational kappa = (A * T).squarefree_kernel();
      const Rational mroot = (A * T / kappa).sqrt();
      st.scale(B * kappa / T, B * kappa * kappa * mroot / (T * T),
               B * kappa * mroot / T);
      out.entry_index = 1;
      if (!kappa.is_one()) out.theta_square_class = kappa;
    } else if (a && b) {  // h = t = false
      st.scale(A * B, A * A * B, A * B);
      out.entry_index = 2;
    } else if (a && !b && h) {
      st.scale(one, A / H, H);
      out.entry_index = 3;
      out.lambda = st.cur.theta1;
    } else if (a && !b && !h && t) {
      const Rational kappa = (A * T).squarefree_kernel();
      const Rational mroot = (A * T / kappa).sqrt();
      st.scale(one, kappa * mroot / T, mroot);
      out.entry_index = 4;
      if (!kappa.is_one()) out.theta_square_class = kappa;
    } else if (a) {  // b = h = t = false
      st.scale(one, A, one);
      out.entry_index = 5;
    } else if (b && h && t) {
      st.scale(B / T, H * B / (T * T), H * B / T);
      out.entry_index = 6;
    } else if (b && h) {
      st.scale(one, H / B, H);
      out.entry_index = 7;
    } else if (b && t) {
      st.scale(B / T, one / T, one);
      out.entry_index = 8;
    } else if (b) {
      st.scale(one, one / B, one);
      out.entry_index = 9;
    } else if (h && t) {
      st.scale(one, H / T, H);
      out.entry_index = 10;
    } else if (h) {
      st.scale(one, one, H);
      out.entry_index = 11;
    } else if (t) {
      st.scale(one, one / T, one);
      out.entry_index = 12;
    } else {
      out.entry_index = 13;
    }
  } else {
    if (b && h) {
      st.scale(H, H * H * H / B, one);
      out.entry_index = 14;
      out.lambda = st.cur.theta1;
    } else if (b && t) {
      st.scale(B / T, B * B / (T * T * T), one);
      out.entry_index = 15;
    } else if (b) {
      st.scale(one, one / B, one);
      out.entry_index = 16;
    } else if (h && t) {
      st.scale(H, H * H / T, one);
      out.entry_index = 17;
    } else if (h) {
      st.scale(H, one, one);
      out.entry_index = 18;
    } else if (t) {
      st.scale(one, one / T, one);
      out.entry_index = 19;
    } else {
      out.entry_index = 20;
    }
  }

  out.reached = st.cur;
  out.witness = st.witness;
  out.residual_e3x = st.rho;
  out.exact_hit = !out.theta_square_class && st.rho.is_zero();

  const ClassEntry& entry = classify_list()[out.entry_index];
  ParamFamilyM1 expected = entry.has_lambda ? entry.at(*out.lambda) : entry.rep;
  if (out.theta_square_class) expected.theta1 = *out.theta_square_class;
  if (!(st.cur == expected))
    throw Error("internal: normalization did not land on the expected tuple");
  return out;
}

bool lambda_rigidity_check(std::size_t family, const Rational& lambda,
                           Rng& rng, std::size_t samples) {
  if (family > 2) throw BadDimensionError("family must be 0, 1 or 2");
  const std::size_t entry_index = family == 0 ? 0 : family == 1 ? 3 : 14;
  const ParamFamilyM1 p = classify_list()[entry_index].at(lambda);

  for (std::size_t s = 0; s < samples; ++s) {
    AdmissibleChange g = AdmissibleChange::identity();
    ParamFamilyM1 q;
    if (entry_index == 0) {
      g.A3 = rng.rational(-5, 5);
      g.B3 = rng.rational(-5, 5);
      g.P1 = rng.rational(-5, 5);
      g.Q1 = rng.rational(-5, 5);
      g.R1 = rng.rational(-5, 5);
      g.P2 = g.B3;
      q = transform_params_case1(p, g);
    } else if (entry_index == 3) {
      g.A1 = rng.nonzero_rational(-5, 5);
      g.B2 = g.A1;
      g.R3 = g.A1;
      g.A3 = rng.rational(-5, 5);
      g.B3 = rng.rational(-5, 5);
      g.P1 = rng.rational(-5, 5);
      g.Q1 = rng.rational(-5, 5);
      g.R1 = rng.rational(-5, 5);
      g.P2 = g.B3;
      q = transform_params_case1(p, g);
    } else {
      g.A3 = rng.rational(-5, 5);
      g.B3 = rng.rational(-5, 5);
      g.P1 = rng.rational(-5, 5);
      g.P2 = rng.rational(-5, 5);
      g.Q1 = rng.rational(-5, 5);
      g.P3 = g.B3;
      g.Q2 = -g.B3 * g.B3;
      q = transform_params_case2(p, g);
    }
    if (!(q == p)) return false;
  }
  return true;
}

M1AgreementReport compare_m1_solution(const SolvedFamily& F) {
  M1AgreementReport rep;
  auto sym = [](const char* n) { return AffineExpr::symbol(n); };
  auto zero = [] { return AffineExpr(); };

  std::map<std::string, AffineExpr> reference;
  reference["tau1"] = sym("delta2") - sym("eta1");
  reference["tau2"] = sym("alpha3") * Rational(-2);
  reference["tau3"] = zero();
  reference["lambda1"] = sym("beta2") - sym("theta1");
  reference["lambda2"] = zero();
  reference["lambda3"] = zero();
  reference["mu1"] = zero();
  reference["mu2"] = zero();
  reference["mu3"] = zero();
  reference["eta2"] = sym("alpha3");
  reference["eta3"] = zero();
  reference["delta3"] = zero();
  reference["beta3"] = zero();
  reference["theta2"] = zero();
  reference["theta3"] = zero();
  for (const char* n : {"alpha1", "alpha2", "alpha3", "beta1", "beta2",
                        "delta1", "delta2", "eta1", "theta1"})
    reference[n] = sym(n);

  const std::vector<std::string> expected_free = {
      "alpha1", "alpha2", "alpha3", "beta1", "beta2",
      "delta1", "delta2", "eta1",   "theta1"};
  bool ok = F.free_params == expected_free;
  if (!ok)
    rep.notes.push_back(
        "free parameters differ from the expected nine family coefficients");

  for (const auto& [slot, ref] : reference) {
    CoefficientAgreement c;
    c.slot = slot;
    c.reference = ref.str();
    auto it = F.assignments.find(slot);
    if (it == F.assignments.end()) {
      c.solved = "<missing>";
      c.agree = false;
    } else {
      c.solved = it->second.str();
      c.agree = it->second == ref;
    }
    ok = ok && c.agree;
    rep.coefficients.push_back(std::move(c));
  }
  rep.all_agree = ok;
  rep.notes.push_back(
      "the solved system gives tau2 = -(alpha3 + eta2) = -2*alpha3 (with "
      "eta2 = alpha3); a transcription reading the {x,x,y} identity row as "
      "tau2 = alpha3 - eta2 would give tau2 = 0 and is inconsistent with "
      "both the solved system and the family table (see Open Questions)");
  return rep;
}

}  // namespace leibniz
