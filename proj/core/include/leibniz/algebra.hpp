#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/matrix.hpp"

namespace leibniz {

/// Finite-dimensional algebra over the rationals, presented by a labelled
/// basis b_0..b_{n-1} and the full table of pairwise products [b_i, b_j]
/// expressed in that basis. No axiom is assumed by the container itself;
/// leibniz_check() and friends test axioms explicitly.
class Algebra {
 public:
  Algebra() = default;
  Algebra(std::string name, std::vector<std::string> basis_labels);

  std::size_t dim() const { return m_labels.size(); }
  const std::string& name() const { return m_name; }
  void set_name(std::string name) { m_name = std::move(name); }

  const std::vector<std::string>& basis() const { return m_labels; }
  const std::string& label(std::size_t i) const;
  /// Index of a basis label; throws UnknownLabelError.
  std::size_t index_of(const std::string& label) const;

  void set_product(std::size_t i, std::size_t j, Vec value);
  const Vec& product(std::size_t i, std::size_t j) const;

  /// Bilinear extension of the basis table to arbitrary vectors.
  Vec bracket(const Vec& a, const Vec& b) const;

  /// True when the two algebras have identical labels and identical tables.
  bool same_table(const Algebra& o) const;

  /// Rewrites the algebra in the basis whose j-th vector is column j of P
  /// (coordinates relative to the current basis). Throws SingularMatrixError
  /// when P is not invertible.
  Algebra change_of_basis(const Matrix& P,
                          std::vector<std::string> new_labels) const;

 private:
  std::string m_name;
  std::vector<std::string> m_labels;
  std::map<std::string, std::size_t> m_index;
  std::vector<Vec> m_table;  ///< row-major: product i*dim + j
};

/// A failing ordered basis triple of an identity check, with the nonzero
/// residual vector.
struct CheckViolation {
  std::size_t i = 0, j = 0, k = 0;
  Vec residual;
};

struct CheckReport {
  /// Reports keep at most this many failures: enough to debug a table, small
  /// enough to print.
  static constexpr std::size_t max_violations = 16;

  bool ok = true;
  std::uint64_t checked = 0;  ///< triples whose residual was fully evaluated
  std::uint64_t skipped = 0;  ///< triples skipped (windowed checks only)
  /// The lexicographically first failing triples (at most max_violations).
  std::vector<CheckViolation> violations;

  const CheckViolation* first_violation() const {
    return violations.empty() ? nullptr : &violations.front();
  }
};

/// Residual of the (right) Leibniz identity on an ordered triple:
///   [[a,b],c] - [[a,c],b] - [a,[b,c]].
Vec leibniz_residual(const Algebra& A, std::size_t i, std::size_t j,
                     std::size_t k);

/// Checks the Leibniz identity over all dim^3 ordered basis triples. Runs in
/// parallel (see parallel.hpp) with a deterministic result: the reported
/// violation is always the lexicographically first one.
CheckReport leibniz_check(const Algebra& A);

/// Checks antisymmetry ([x,y]+[y,x]=0 on basis pairs) on top of the Leibniz
/// identity; together these make the table a Lie algebra.
bool is_lie(const Algebra& A);

/// Linear subspace of Q^n held in canonical reduced row-echelon form, so two
/// equal subspaces compare equal member-wise.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : m_ambient(ambient_dim) {}
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& gens);

  std::size_t ambient() const { return m_ambient; }
  std::size_t dim() const { return m_rows.size(); }
  const std::vector<Vec>& basis() const { return m_rows; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const {
    return m_ambient == o.m_ambient && m_rows == o.m_rows;
  }

  /// Smallest subspace containing both.
  Subspace sum(const Subspace& o) const;

  /// Reduces v modulo this subspace (eliminates pivot coordinates).
  Vec reduce(const Vec& v) const;

 private:
  std::size_t m_ambient = 0;
  std::vector<Vec> m_rows;  ///< canonical RREF rows, pivots strictly increasing
};

/// Span of all squares [x,x], obtained by polarization: the vectors [b_i,b_i]
/// together with [b_i,b_j] + [b_j,b_i] for i < j.
Subspace squares_span(const Algebra& A);

/// Smallest two-sided ideal containing all squares: the squares span closed
/// under bracketing with basis elements on either side, iterated to a fixed
/// point.
Subspace squares_ideal(const Algebra& A);

/// True when [S, L] and [L, S] both lie inside S.
bool is_ideal(const Algebra& A, const Subspace& S);

/// Quotient algebra L / I. Basis: the images of the original basis vectors
/// whose coordinates are not pivot coordinates of I, labelled by the original
/// label with a trailing '~'. Throws NotAnIdealError when I is not two-sided.
Algebra quotient(const Algebra& A, const Subspace& I);

/// {a : [a, L] = 0}.
Subspace left_annihilator(const Algebra& A);
/// {a : [L, a] = 0}.
Subspace right_annihilator(const Algebra& A);
/// {a : [a, L] = [L, a] = 0}.
Subspace center(const Algebra& A);
/// Span of all products [L, L].
Subspace derived_subspace(const Algebra& A);

/// Dimensions of the lower central series S_1 = L, S_{k+1} = [S_k, L],
/// starting at S_1 and stopping when the dimension stabilizes (the stable
/// value is included once).
std::vector<std::size_t> lower_central_dims(const Algebra& A);

/// Basis-independent profile used to compare algebras quickly and to report
/// structure in the command-line tool.
struct Fingerprint {
  std::size_t dim = 0;
  std::vector<std::size_t> lower_central;  ///< see lower_central_dims()
  std::size_t left_annihilator_dim = 0;
  std::size_t right_annihilator_dim = 0;
  std::size_t center_dim = 0;
  std::size_t squares_span_dim = 0;
  std::size_t squares_ideal_dim = 0;

  bool operator==(const Fingerprint&) const = default;
  std::string str() const;
};

Fingerprint fingerprint(const Algebra& A);

/// Direct sum with pairwise-zero cross products. With a single part the
/// labels are kept; with several, each label gains a "@s" suffix (s = 1-based
/// part index) so the combined labels stay unique.
Algebra direct_sum(const std::vector<Algebra>& parts, const std::string& name);

}  // namespace leibniz
