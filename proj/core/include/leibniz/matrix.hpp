#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "leibniz/rational.hpp"

namespace leibniz {

/// Sparse vector: index -> nonzero coefficient. Entries with value zero are
/// never stored; helpers below maintain that invariant.
using Vec = std::map<std::size_t, Rational>;

/// Adds `coeff * src` into `dst`, erasing entries that cancel to zero.
void vec_axpy(Vec& dst, const Rational& coeff, const Vec& src);

/// Scales a sparse vector in place (coeff may be zero, clearing it).
void vec_scale(Vec& v, const Rational& coeff);

/// Dot product of two sparse vectors.
Rational vec_dot(const Vec& a, const Vec& b);

/// Dense exact matrix over the rationals with a deterministic row-reduction.
/// Dimensions in this project stay small (a few hundred at most), so the
/// representation keeps a full row-major grid for simplicity.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : m_rows(rows), m_cols(cols), m_data(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return m_rows; }
  std::size_t cols() const { return m_cols; }

  Rational& at(std::size_t r, std::size_t c) { return m_data[r * m_cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return m_data[r * m_cols + c];
  }

  bool operator==(const Matrix& o) const {
    return m_rows == o.m_rows && m_cols == o.m_cols && m_data == o.m_data;
  }

  Matrix operator*(const Matrix& o) const;
  Vec apply(const Vec& v) const;  ///< Matrix * column vector (sparse in/out).

  Matrix transposed() const;

  /// Inverse via Gauss-Jordan on [M | I]; throws SingularMatrixError.
  Matrix inverse() const;

  std::size_t rank() const;

  /// Basis of the right nullspace (vectors v with M v = 0), one sparse vector
  /// per free column, in increasing free-column order, with the free
  /// coordinate set to 1.
  std::vector<Vec> nullspace() const;

 private:
  std::size_t m_rows = 0;
  std::size_t m_cols = 0;
  std::vector<Rational> m_data;
};

/// Result of row reduction: the reduced matrix, its pivot columns in order,
/// and the rank.
struct RrefResult {
  Matrix R;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

/// Reduced row-echelon form with a deterministic pivot rule: scan columns
/// left to right, take the first row (top to bottom) with a nonzero entry.
RrefResult rref(Matrix M);

}  // namespace leibniz
