#ifndef SL2HOM_MAT_HPP
#define SL2HOM_MAT_HPP

#include <cstddef>
#include <vector>

#include "sl2hom/errors.hpp"

namespace sl2hom {

// Dense row-major matrix over an exact ring (Fq or MPoly).  All entries
// must belong to one ring instance; operations are pure.
template <typename T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t rows, size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Mat identity(size_t n, const T& zero, const T& one) {
    Mat m(n, n, zero);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const T& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }
  T& operator()(size_t i, size_t j) { return at(i, j); }
  const T& operator()(size_t i, size_t j) const { return at(i, j); }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_ || cols_ == 0) fail(Err::RingMismatch, "matrix product shape mismatch");
    Mat out(rows_, o.cols_, data_[0] - data_[0]);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        const T& aik = at(i, k);
        for (size_t j = 0; j < o.cols_; ++j) out.at(i, j) += aik * o.at(k, j);
      }
    return out;
  }

  Mat operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(Err::RingMismatch, "matrix sum shape mismatch");
    Mat out = *this;
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = out.data_[i] + o.data_[i];
    return out;
  }

  Mat operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      fail(Err::RingMismatch, "matrix difference shape mismatch");
    Mat out = *this;
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = out.data_[i] - o.data_[i];
    return out;
  }

  Mat transpose() const {
    if (rows_ == 0) return *this;
    Mat out(cols_, rows_, data_[0]);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

 private:
  size_t rows_, cols_;
  std::vector<T> data_;
};

// Anti-transpose: result(i,j) = A(n-j-1, n-i-1) in 0-based indexing; the
// flip across the anti-diagonal, an involution.
template <typename T>
Mat<T> tau_transpose(const Mat<T>& a) {
  if (!a.square()) fail(Err::NotSquare, "tau needs a square matrix");
  size_t n = a.rows();
  Mat<T> out = a;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out.at(i, j) = a.at(n - 1 - j, n - 1 - i);
  return out;
}

template <typename T>
Mat<T> kron_product(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() == 0 || b.rows() == 0) fail(Err::RingMismatch, "empty factor");
  Mat<T> out(a.rows() * b.rows(), a.cols() * b.cols(), a.at(0, 0) - a.at(0, 0));
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l)
          out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
  return out;
}

template <typename T>
Mat<T> direct_sum(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() == 0 || b.rows() == 0) fail(Err::RingMismatch, "empty summand");
  T zero = a.at(0, 0) - a.at(0, 0);
  Mat<T> out(a.rows() + b.rows(), a.cols() + b.cols(), zero);
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

}  // namespace sl2hom

#endif
