#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/matrix.hpp"

namespace leibniz {

/// Canonical basis bookkeeping for a Heisenberg algebra of dimension 2k+1:
/// the central generator followed by the k X-generators and the k
/// D-generators, labeled "one", "X1".."Xk", "D1".."Dk".
struct HeisenbergBasis {
  std::size_t k = 0;
  std::vector<std::string> labels;
};

HeisenbergBasis heisenberg_basis(std::size_t k);

/// Heisenberg Lie algebra of odd dimension n = 2k+1 >= 3 on the canonical
/// basis: the only nonzero products are [Xi, Di] = one, [Di, Xi] = -one.
/// Throws BadDimensionError when n is even or < 3.
Algebra make_heisenberg(std::size_t n);

/// How a structured direct sum was assembled: summand dimensions plus, per
/// summand, the basis indices of its block inside the sum.
struct DirectSumStructure {
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::size_t>> blocks;
};

/// Block-diagonal direct sum that also reports which indices each summand
/// occupies. Labels are suffixed "@s" when there is more than one part.
std::pair<Algebra, DirectSumStructure> direct_sum_structured(
    const std::vector<Algebra>& parts, const std::string& name);

enum class HeisenbergReject {
  NotLie,          ///< table is not antisymmetric or fails the identity
  CenterDim,       ///< center is not 1-dimensional or differs from [L,L]
  DegenerateForm,  ///< the induced alternating form on L/Z is degenerate
};

std::string reject_reason_name(HeisenbergReject r);

/// Positive detection outcome: pair count k plus the change-of-basis matrix
/// whose columns are the canonical basis vectors (one, X1..Xk, D1..Dk)
/// written in the input algebra's coordinates, so
/// A.change_of_basis(to_canonical, heisenberg_basis(k).labels) reproduces
/// make_heisenberg(2k+1) exactly.
struct HeisenbergMatch {
  std::size_t k = 0;
  Matrix to_canonical;
};

struct HeisenbergDetection {
  std::optional<HeisenbergMatch> match;
  std::optional<HeisenbergReject> reason;
  bool ok() const { return match.has_value(); }
};

/// Recognizes Heisenberg Lie algebras in arbitrary bases: accepts exactly the
/// antisymmetric tables passing the Leibniz identity whose center is the
/// 1-dimensional derived subalgebra and whose induced alternating form on L/Z
/// is nondegenerate. The canonical central generator is the first vector of
/// the derived subspace's echelon basis; the symplectic pairs are produced by
/// exact symplectic Gram-Schmidt (lowest-index vector first, partner scaled
/// so the form takes value 1, remaining vectors projected off the pair).
HeisenbergDetection detect_heisenberg(const Algebra& A);

}  // namespace leibniz
