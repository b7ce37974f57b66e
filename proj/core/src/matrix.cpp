#include "leibniz/matrix.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

void vec_axpy(Vec& dst, const Rational& coeff, const Vec& src) {
  if (coeff.is_zero()) return;
  for (const auto& [idx, val] : src) {
    auto it = dst.find(idx);
    if (it == dst.end()) {
      dst.emplace(idx, coeff * val);
    } else {
      it->second += coeff * val;
      if (it->second.is_zero()) dst.erase(it);
    }
  }
}

void vec_scale(Vec& v, const Rational& coeff) {
  if (coeff.is_zero()) {
    v.clear();
    return;
  }
  for (auto& [idx, val] : v) val *= coeff;
}

Rational vec_dot(const Vec& a, const Vec& b) {
  const Vec& small = a.size() <= b.size() ? a : b;
  const Vec& large = a.size() <= b.size() ? b : a;
  Rational sum;
  for (const auto& [idx, val] : small) {
    auto it = large.find(idx);
    if (it != large.end()) sum += val * it->second;
  }
  return sum;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (m_cols != o.m_rows)
    throw BadDimensionError("Matrix multiply: inner dimensions differ");
  Matrix out(m_rows, o.m_cols);
  for (std::size_t i = 0; i < m_rows; ++i)
    for (std::size_t k = 0; k < m_cols; ++k) {
      const Rational& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.m_cols; ++j) {
        const Rational& b = o.at(k, j);
        if (!b.is_zero()) out.at(i, j) += a * b;
      }
    }
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  Vec out;
  for (const auto& [col, coeff] : v) {
    if (col >= m_cols)
      throw BadDimensionError("Matrix apply: vector index out of range");
    for (std::size_t i = 0; i < m_rows; ++i) {
      const Rational& a = at(i, col);
      if (a.is_zero()) continue;
      Rational& slot = out[i];
      slot += a * coeff;
      if (slot.is_zero()) out.erase(i);
    }
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(m_cols, m_rows);
  for (std::size_t i = 0; i < m_rows; ++i)
    for (std::size_t j = 0; j < m_cols; ++j) out.at(j, i) = at(i, j);
  return out;
}

Matrix Matrix::inverse() const {
  if (m_rows != m_cols)
    throw SingularMatrixError("Matrix inverse: not square");
  const std::size_t n = m_rows;
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = Rational(1);
  }
  RrefResult r = rref(std::move(aug));
  // Rank of the left block only: pivots in the identity half do not make the
  // matrix invertible.
  std::size_t left_rank = 0;
  for (std::size_t c : r.pivot_cols)
    if (c < n) ++left_rank;
  if (left_rank != n)
    throw SingularMatrixError("Matrix inverse: matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.R.at(i, n + j);
  return inv;
}

std::size_t Matrix::rank() const { return rref(*this).rank; }

std::vector<Vec> Matrix::nullspace() const {
  RrefResult r = rref(*this);
  std::vector<bool> is_pivot(m_cols, false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < m_cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v;
    v[free_col] = Rational(1);
    // Each pivot row i reads: x[pivot_cols[i]] + sum(R[i][j] * x[j]) = 0
    // over non-pivot columns j, so the pivot coordinate is -R[i][free_col].
    for (std::size_t i = 0; i < r.rank; ++i) {
      const Rational& coeff = r.R.at(i, free_col);
      if (!coeff.is_zero()) v[r.pivot_cols[i]] = -coeff;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

RrefResult rref(Matrix M) {
  const std::size_t rows = M.rows();
  const std::size_t cols = M.cols();
  RrefResult out;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    // Deterministic pivot: first row at or below pivot_row with a nonzero.
    std::size_t sel = rows;
    for (std::size_t r = pivot_row; r < rows; ++r) {
      if (!M.at(r, col).is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(M.at(sel, j), M.at(pivot_row, j));
    const Rational inv = M.at(pivot_row, col).inverse();
    for (std::size_t j = col; j < cols; ++j) M.at(pivot_row, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row) continue;
      const Rational factor = M.at(r, col);
      if (factor.is_zero()) continue;
      for (std::size_t j = col; j < cols; ++j)
        M.at(r, j) -= factor * M.at(pivot_row, j);
    }
    out.pivot_cols.push_back(col);
    ++pivot_row;
  }
  out.rank = pivot_row;
  out.R = std::move(M);
  return out;
}

}  // namespace leibniz
