#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "leibniz/matrix.hpp"

namespace leibniz {

/// Affine expression c + sum(terms[name] * name) over named parameters.
/// Zero coefficients are never stored in `terms`.
struct AffineExpr {
  Rational c;
  std::map<std::string, Rational> terms;

  AffineExpr() = default;
  explicit AffineExpr(Rational constant) : c(std::move(constant)) {}
  static AffineExpr symbol(const std::string& name) {
    AffineExpr e;
    e.terms[name] = Rational(1);
    return e;
  }

  bool is_constant() const { return terms.empty(); }
  bool is_zero() const { return c.is_zero() && terms.empty(); }

  AffineExpr& operator+=(const AffineExpr& o);
  AffineExpr& operator-=(const AffineExpr& o);
  AffineExpr& operator*=(const Rational& k);
  friend AffineExpr operator+(AffineExpr a, const AffineExpr& b) {
    a += b;
    return a;
  }
  friend AffineExpr operator-(AffineExpr a, const AffineExpr& b) {
    a -= b;
    return a;
  }
  friend AffineExpr operator*(AffineExpr a, const Rational& k) {
    a *= k;
    return a;
  }
  friend AffineExpr operator*(const Rational& k, AffineExpr a) {
    a *= k;
    return a;
  }
  /// Product of two affine expressions. Throws NonlinearTemplateError unless
  /// at least one factor is constant.
  friend AffineExpr operator*(const AffineExpr& a, const AffineExpr& b);

  bool operator==(const AffineExpr& o) const {
    return c == o.c && terms == o.terms;
  }

  /// Substitutes values for every parameter appearing in `terms`; throws
  /// MissingParameterError when one is absent from `values`.
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  /// Rewrites this expression over a new parameter set: each old parameter is
  /// replaced by the given affine expression; unmapped parameters stay.
  AffineExpr substitute(const std::map<std::string, AffineExpr>& repl) const;

  std::string str() const;  ///< e.g. "3/2 + a - 2*b", "0" when zero.
};

/// General solution of a linear system: every registered variable expressed
/// as an affine combination of the free parameters (which are themselves a
/// subset of the variables, each assigned the identity expression).
struct SolutionSpace {
  std::vector<std::string> free_params;          ///< in registration order
  std::map<std::string, AffineExpr> assignment;  ///< var -> expr in free params
  std::size_t rank = 0;                          ///< number of determined vars

  /// Plugs concrete values for all free parameters and returns a value per
  /// variable. Throws MissingParameterError when a free parameter is absent.
  std::map<std::string, Rational> instantiate(
      const std::map<std::string, Rational>& values) const;
};

/// A system of affine equations "expr = 0" over named variables. Variables
/// acquire indices in registration order; row reduction pivots leftmost-first,
/// so variables registered earlier are preferentially solved for and the later
/// ones survive as free parameters.
class LinearSystem {
 public:
  /// Registers a variable (idempotent) and returns its column index.
  std::size_t add_variable(const std::string& name);

  bool has_variable(const std::string& name) const {
    return m_index.count(name) != 0;
  }
  std::size_t var_index(const std::string& name) const;
  const std::vector<std::string>& variables() const { return m_names; }

  /// Adds the constraint expr = 0. Every parameter of the expression must
  /// already be a registered variable (UnknownLabelError otherwise). Rows are
  /// canonicalized (leading coefficient 1) and duplicates are dropped, so the
  /// stored equation count stays small even when many bracket slots repeat
  /// the same relation. A constant nonzero expression is recorded and makes
  /// solve() throw InconsistentError.
  void add_equation(const AffineExpr& expr);

  std::size_t equation_count() const { return m_rows.size(); }

  /// Solves the system. Throws InconsistentError when no solution exists.
  SolutionSpace solve() const;

 private:
  struct Row {
    Vec coeffs;  ///< column index -> coefficient
    Rational constant;
  };

  std::vector<std::string> m_names;
  std::map<std::string, std::size_t> m_index;
  std::vector<Row> m_rows;
  std::set<std::string> m_row_keys;  ///< canonical row fingerprints for dedupe
};

}  // namespace leibniz
