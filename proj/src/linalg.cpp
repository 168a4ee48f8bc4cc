#include "sl2hom/linalg.hpp"

namespace sl2hom {

FqMat fq_identity(const FieldCtx* F, size_t n) {
  return FqMat::identity(n, F->zero(), F->one());
}

FqMat fq_diag(const FieldCtx* F, const std::vector<Fq>& d) {
  FqMat m(d.size(), d.size(), F->zero());
  for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

FqMat fq_diag_ints(const FieldCtx* F, const std::vector<long long>& d) {
  std::vector<Fq> v;
  v.reserve(d.size());
  for (long long x : d) v.push_back(F->from_int(x));
  return fq_diag(F, v);
}

FqMat fq_swap(const FieldCtx* F, size_t n, size_t lambda, size_t mu) {
  if (!(1 <= lambda && lambda < mu && mu <= n)) fail(Err::BadParams, "bad swap indices");
  FqMat m(n, n, F->zero());
  for (size_t i = 0; i < n; ++i) {
    size_t j = i;
    if (i == lambda - 1) j = mu - 1;
    else if (i == mu - 1) j = lambda - 1;
    m.at(i, j) = F->one();
  }
  return m;
}

std::vector<size_t> rref(FqMat& a) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    size_t sel = r;
    while (sel < a.rows() && a.at(sel, c).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != r)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(r, j));
    Fq inv = fq_inv(a.at(r, c));
    for (size_t j = 0; j < a.cols(); ++j) a.at(r, j) = a.at(r, j) * inv;
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Fq f = a.at(i, c);
      for (size_t j = 0; j < a.cols(); ++j) a.at(i, j) = a.at(i, j) - f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t rank(FqMat a) { return rref(a).size(); }

Nullspace nullspace(const FqMat& a) {
  if (a.rows() == 0 || a.cols() == 0) return {a.cols(), {}};
  const FieldCtx* F = a.at(0, 0).ctx();
  FqMat r = a;
  std::vector<size_t> pivots = rref(r);
  std::vector<bool> is_pivot(a.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;
  Nullspace ns;
  ns.dim = a.cols() - pivots.size();
  for (size_t c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    FqVec v(a.cols(), F->zero());
    v[c] = F->one();
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, c);
    ns.basis.push_back(std::move(v));
  }
  return ns;
}

bool is_invertible(const FqMat& a) { return a.square() && rank(a) == a.rows(); }

FqMat inverse(const FqMat& a) {
  if (!a.square()) fail(Err::NotSquare, "inverse needs a square matrix");
  size_t n = a.rows();
  if (n == 0) return a;
  const FieldCtx* F = a.at(0, 0).ctx();
  FqMat aug(n, 2 * n, F->zero());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = F->one();
  }
  std::vector<size_t> pivots = rref(aug);
  if (pivots.size() != n || pivots[n - 1] != n - 1)
    fail(Err::NotRegular, "matrix is not invertible");
  FqMat out(n, n, F->zero());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

FqMat inn(const FqMat& p, const FqMat& a) { return inverse(p) * a * p; }

Fq det(const FqMat& a) {
  if (!a.square()) fail(Err::NotSquare, "det needs a square matrix");
  size_t n = a.rows();
  const FieldCtx* F = a.at(0, 0).ctx();
  FqMat m = a;
  Fq d = F->one();
  size_t r = 0;
  for (size_t c = 0; c < n && r < n; ++c) {
    size_t sel = r;
    while (sel < n && m.at(sel, c).is_zero()) ++sel;
    if (sel == n) return F->zero();
    if (sel != r) {
      for (size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(r, j));
      d = -d;
    }
    d = d * m.at(r, c);
    Fq inv = fq_inv(m.at(r, c));
    for (size_t i = r + 1; i < n; ++i) {
      if (m.at(i, c).is_zero()) continue;
      Fq f = m.at(i, c) * inv;
      for (size_t j = c; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    ++r;
  }
  return d;
}

LinearSolver::LinearSolver(const FieldCtx* F, size_t unknowns)
    : F_(F), n_(unknowns), conflict_({FqVec(), F->zero()}) {}

LinearSolver::RowFate LinearSolver::add_row(FqVec coeffs, Fq rhs) {
  if (coeffs.size() != n_) fail(Err::BadParams, "row arity mismatch");
  FqVec orig = coeffs;
  Fq orig_rhs = rhs;
  for (size_t k = 0; k < rows_.size(); ++k) {
    Fq f = coeffs[pivots_[k]];
    if (f.is_zero()) continue;
    for (size_t j = 0; j < n_; ++j) coeffs[j] = coeffs[j] - f * rows_[k][j];
    rhs = rhs - f * rhs_[k];
  }
  size_t pc = n_;
  for (size_t j = 0; j < n_; ++j)
    if (!coeffs[j].is_zero()) {
      pc = j;
      break;
    }
  if (pc == n_) {
    if (rhs.is_zero()) return RowFate::Reduced;
    if (!inconsistent_) {
      inconsistent_ = true;
      conflict_ = {std::move(orig), orig_rhs};
    }
    return RowFate::Inconsistent;
  }
  Fq inv = fq_inv(coeffs[pc]);
  for (size_t j = 0; j < n_; ++j) coeffs[j] = coeffs[j] * inv;
  rhs = rhs * inv;
  // back-substitute into existing rows to keep reduced form
  for (size_t k = 0; k < rows_.size(); ++k) {
    Fq f = rows_[k][pc];
    if (f.is_zero()) continue;
    for (size_t j = 0; j < n_; ++j) rows_[k][j] = rows_[k][j] - f * coeffs[j];
    rhs_[k] = rhs_[k] - f * rhs;
  }
  rows_.push_back(std::move(coeffs));
  rhs_.push_back(rhs);
  pivots_.push_back(pc);
  return RowFate::NewPivot;
}

FqVec LinearSolver::solution() const {
  if (!unique()) fail(Err::AmbiguousSolution, "system is not uniquely solvable");
  FqVec x(n_, F_->zero());
  for (size_t k = 0; k < rows_.size(); ++k) x[pivots_[k]] = rhs_[k];
  return x;
}

}  // namespace sl2hom
