#include "cmpl/tau.hpp"

namespace cmpl {

ExtMatrix ext_zero_matrix(std::size_t rows, std::size_t cols, const ExtPtr& K) {
  return ExtMatrix(rows, cols, ExtElem(K));
}

ExtMatrix ext_identity(std::size_t n, const ExtPtr& K) {
  return ExtMatrix::identity(n, ExtElem(K), ExtElem::from_poly(K, Poly::one(K->base())));
}

ExtMatrix twist(const ExtMatrix& m, unsigned s) {
  if (s == 0) return m;
  return m.map([s](const ExtElem& x) { return x.is_zero() ? x : x.frobenius(s); });
}

ExtVector twist(const ExtVector& v, unsigned s) {
  ExtVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.is_zero() || s == 0 ? x : x.frobenius(s));
  return out;
}

TauMatrixPoly::TauMatrixPoly(std::vector<ExtMatrix> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw DomainError("TauMatrixPoly needs at least one coefficient to fix its shape");
  d_ = c_[0].rows();
  K_ = c_[0].zero().ext();
  for (const auto& m : c_)
    if (m.rows() != d_ || m.cols() != d_) throw DomainError("tau polynomial coefficient has wrong dimension");
  trim();
}

TauMatrixPoly TauMatrixPoly::constant(const ExtMatrix& a0) { return TauMatrixPoly(std::vector<ExtMatrix>{a0}); }

ExtMatrix TauMatrixPoly::coeff(std::size_t i) const {
  if (i < c_.size()) return c_[i];
  return ext_zero_matrix(d_, d_, K_);
}

void TauMatrixPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TauMatrixPoly operator+(const TauMatrixPoly& a, const TauMatrixPoly& b) {
  if (a.d_ != b.d_) throw DomainError("tau polynomial dimension mismatch");
  TauMatrixPoly r(a.d_, a.K_ ? a.K_ : b.K_);
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  for (std::size_t i = 0; i < n; ++i) r.c_.push_back(a.coeff(i) + b.coeff(i));
  r.trim();
  return r;
}

TauMatrixPoly operator-(const TauMatrixPoly& a, const TauMatrixPoly& b) {
  if (a.d_ != b.d_) throw DomainError("tau polynomial dimension mismatch");
  TauMatrixPoly r(a.d_, a.K_ ? a.K_ : b.K_);
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  for (std::size_t i = 0; i < n; ++i) r.c_.push_back(a.coeff(i) - b.coeff(i));
  r.trim();
  return r;
}

TauMatrixPoly operator*(const TauMatrixPoly& a, const TauMatrixPoly& b) {
  if (a.d_ != b.d_) throw DomainError("tau polynomial dimension mismatch");
  TauMatrixPoly r(a.d_, a.K_ ? a.K_ : b.K_);
  if (a.is_zero() || b.is_zero()) return r;
  const std::size_t n = a.c_.size() + b.c_.size() - 1;
  r.c_.assign(n, ext_zero_matrix(a.d_, a.d_, r.K_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * twist(b.c_[j], static_cast<unsigned>(i));
    }
  }
  r.trim();
  return r;
}

ExtVector TauMatrixPoly::apply(const ExtVector& w) const {
  if (w.size() != d_) throw DomainError("point dimension does not match the t-module");
  ExtVector out(d_, ExtElem(K_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    const ExtVector wi = c_[i].apply(twist(w, static_cast<unsigned>(i)));
    for (std::size_t k = 0; k < d_; ++k) out[k] += wi[k];
  }
  return out;
}

}  // namespace cmpl
