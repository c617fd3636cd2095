#pragma once

#include <cstddef>
#include <vector>

#include "cmpl/errors.hpp"

namespace cmpl {

/// Dense row-major matrix over an exact scalar type. Scalars carry their
/// own context (field pointers), so a zero prototype is supplied on build.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& zero) : r_(rows), c_(cols), a_(rows * cols, zero), zero_(zero) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  const T& zero() const { return zero_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  const std::vector<T>& data() const { return a_; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& b) {
    check_shape(b);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = a_[i] + b.a_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& b) {
    check_shape(b);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = a_[i] - b.a_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw DomainError("matrix dimension mismatch");
    Matrix out(a.r_, b.c_, a.zero_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.c_; ++j) {
          const T& y = b(k, j);
          if (!y.is_zero()) out(i, j) = out(i, j) + x * y;
        }
      }
    return out;
  }
  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != c_) throw DomainError("matrix-vector dimension mismatch");
    std::vector<T> out(r_, zero_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) {
        const T& x = (*this)(i, j);
        if (!x.is_zero() && !v[j].is_zero()) out[i] = out[i] + x * v[j];
      }
    return out;
  }
  template <class Fn>
  Matrix map(Fn&& fn) const {
    Matrix out(*this);
    for (auto& x : out.a_) x = fn(x);
    if (!out.a_.empty()) out.zero_ = fn(zero_);
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }

 private:
  void check_shape(const Matrix& b) const {
    if (r_ != b.r_ || c_ != b.c_) throw DomainError("matrix dimension mismatch");
  }
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
  T zero_{};
};

}  // namespace cmpl
