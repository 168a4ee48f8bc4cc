#ifndef SL2HOM_LINALG_HPP
#define SL2HOM_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "sl2hom/field.hpp"
#include "sl2hom/mat.hpp"

namespace sl2hom {

using FqMat = Mat<Fq>;
using FqVec = std::vector<Fq>;

FqMat fq_identity(const FieldCtx* F, size_t n);
FqMat fq_diag(const FieldCtx* F, const std::vector<Fq>& d);
FqMat fq_diag_ints(const FieldCtx* F, const std::vector<long long>& d);
// Transposition matrix P_{lambda,mu} (1-based indices, lambda < mu).
FqMat fq_swap(const FieldCtx* F, size_t n, size_t lambda, size_t mu);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<size_t> rref(FqMat& a);
size_t rank(FqMat a);

// Kernel basis of A (column vectors v with A v = 0); dimension = basis size.
struct Nullspace {
  size_t dim;
  std::vector<FqVec> basis;
};
Nullspace nullspace(const FqMat& a);
inline size_t nullspace_dim(const FqMat& a) { return nullspace(a).dim; }

bool is_invertible(const FqMat& a);
FqMat inverse(const FqMat& a);  // NotRegular when singular
// Inn_P(A) = P^{-1} A P
FqMat inn(const FqMat& p, const FqMat& a);

Fq det(const FqMat& a);

// Incremental exact Gauss for A x = b systems built row by row.  Rows are
// reduced against current pivots immediately, so inconsistency is detected
// on arrival and memory stays O(pivots).
class LinearSolver {
 public:
  LinearSolver(const FieldCtx* F, size_t unknowns);

  enum class RowFate { Reduced, NewPivot, Inconsistent };
  RowFate add_row(FqVec coeffs, Fq rhs);

  size_t rank() const { return pivots_.size(); }
  size_t unknowns() const { return n_; }
  bool inconsistent() const { return inconsistent_; }
  bool unique() const { return !inconsistent_ && pivots_.size() == n_; }
  // Unique solution; call only when unique().
  FqVec solution() const;
  // The offending row as received (coeffs, rhs) when inconsistent.
  const std::pair<FqVec, Fq>& conflict() const { return conflict_; }

 private:
  const FieldCtx* F_;
  size_t n_;
  std::vector<size_t> pivots_;          // pivot column per stored row
  std::vector<FqVec> rows_;             // echelon rows, normalized
  std::vector<Fq> rhs_;
  bool inconsistent_ = false;
  std::pair<FqVec, Fq> conflict_;
};

}  // namespace sl2hom

#endif
