#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Monomial in a fixed number of variables, stored as an exponent vector.
/// Ordered by total degree first, then lexicographically on the exponents,
/// which is also the enumeration order of monomial basis blocks.
struct Monomial {
  std::vector<std::uint32_t> e;

  explicit Monomial(std::size_t nvars = 0) : e(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) {}

  std::size_t nvars() const { return e.size(); }
  std::uint64_t degree() const;
  std::string label() const;  ///< "1", "x1", "x1^2*x3", ...

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator<(const Monomial& o) const {
    const std::uint64_t da = degree(), db = o.degree();
    if (da != db) return da < db;
    return e < o.e;
  }
};

/// Exact polynomial over the rationals in a fixed number of variables.
/// Terms with coefficient zero are never stored.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0) : m_nvars(nvars) {}
  static Polynomial monomial(Monomial m, Rational coeff = Rational(1));
  static Polynomial constant(std::size_t nvars, Rational c);

  std::size_t nvars() const { return m_nvars; }
  bool is_zero() const { return m_terms.empty(); }
  std::uint64_t degree() const;  ///< 0 for the zero polynomial
  const std::map<Monomial, Rational>& terms() const { return m_terms; }
  Rational coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& coeff);
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& k);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    a -= b;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Rational& k) {
    a *= k;
    return a;
  }
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const {
    return m_nvars == o.m_nvars && m_terms == o.m_terms;
  }

  Polynomial mul_var(std::size_t var) const;  ///< multiply by x_{var+1}
  Polynomial deriv(std::size_t var) const;    ///< ∂/∂x_{var+1}

  std::string str() const;  ///< e.g. "2*x1^2 - 1/3*x2", "0"

 private:
  std::size_t m_nvars = 0;
  std::map<Monomial, Rational> m_terms;
};

/// Generator of a Heisenberg summand: the distinguished central element One,
/// or the i-th element of an X/D pair (i is 1-based), inside a 1-based
/// summand.
struct Gen {
  enum class Kind { One, X, D };
  Kind kind = Kind::One;
  std::size_t i = 0;        ///< pair index within the summand, 1-based
  std::size_t summand = 1;  ///< 1-based
};

/// Label of a generator: "one", "X2", "D1" for a single summand; with
/// `total_summands` > 1 a "@s" suffix is appended ("X2@3").
std::string gen_label(const Gen& g, std::size_t total_summands);

/// Right action of one generator on a polynomial in the graded module: One
/// acts as the identity, X_i as multiplication by its variable and D_i as the
/// partial derivative. `var_offsets[s-1]` is the number of variables consumed
/// by summands before s, so generator (s, i) acts on variable
/// var_offsets[s-1] + i - 1 (0-based).
Polynomial fock_action(const Polynomial& p, const Gen& g,
                       const std::vector<std::size_t>& var_offsets);

/// Presentation of a graded algebra: finitely many generators plus the space
/// of polynomials in `nvars` variables, with products
///   [gen_a, gen_b]  = gen_products entry (coordinates over generators),
///   [poly, gen]     = action(poly, gen),
///   [gen, poly] = [poly, poly'] = 0.
/// The full object is infinite-dimensional; materialize() produces the exact
/// finite window used by checks and the command-line tool.
struct GradedAlgebra {
  std::string name;
  std::size_t nvars = 0;
  std::vector<Gen> gens;
  std::vector<std::string> gen_labels;
  /// (a, b) -> nonzero coordinates over the generator list; absent = zero.
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rational>>
      gen_products;
  std::function<Polynomial(const Polynomial&, std::size_t)> action;
  std::uint64_t default_window = 6;
};

/// Finite slice of a graded algebra: all generators plus every monomial of
/// degree <= window_degree. Basis pairs whose true product leaves the window
/// are listed in out_of_window and their table entries are left empty; they
/// are never silently truncated, and the windowed Leibniz check skips (and
/// counts) every triple that touches one.
struct Materialized {
  Algebra algebra;
  std::uint64_t window_degree = 0;
  std::set<std::pair<std::size_t, std::size_t>> out_of_window;
};

/// All monomials in `nvars` variables with degree <= window, in Monomial
/// order (degree, then lexicographic).
std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint64_t window);

Materialized materialize(const GradedAlgebra& G, std::uint64_t window);

/// Windowed Leibniz check: evaluates the identity on every ordered basis
/// triple whose evaluation never touches an out-of-window pair; the rest are
/// counted as skipped.
CheckReport leibniz_check(const Materialized& M);

/// Heisenberg-Fock algebra of odd dimension n = 2k+1 >= 3: generators one,
/// X1..Xk, D1..Dk acting on polynomials in k variables ([p, one] = p,
/// [p, Xi] = xi*p, [p, Di] = dp/dxi). The only nonzero generator products are
/// the Heisenberg pairs [Xi, Di] = one and [Di, Xi] = -one. `d` becomes the
/// default materialization window.
/// Throws BadDimensionError unless n is odd and n >= 3.
GradedAlgebra build_hfl(std::size_t n, std::uint64_t d);

/// Generalized Heisenberg-Fock algebra of a list of summand pair-counts ks
/// (summand s is a Heisenberg factor of dimension 2*ks[s-1]+1): summand s
/// contributes generators one@s, X1@s..Xk@s, D1@s..Dk@s; its pairs act on its
/// own block of variables while every one@s acts as the identity on the whole
/// polynomial space. Within a summand [Xi@s, Di@s] = one@s and
/// [Di@s, Xi@s] = -one@s; every cross-summand generator product is zero. `d`
/// becomes the default materialization window.
/// Throws BadDimensionError if ks is empty or contains a zero.
GradedAlgebra build_generalized_hfl(const std::vector<std::size_t>& ks,
                                    std::uint64_t d);

}  // namespace leibniz
