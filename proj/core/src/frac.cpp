#include "cmpl/frac.hpp"

#include <sstream>

namespace cmpl {

namespace {

// Multiply every coordinate by key^e, one sparse q-power factor at a time.
AxElem mul_key_power(AxElem x, const Poly& key, long e) {
  if (e <= 0 || x.is_zero()) return x;
  const long q = key.F().q();
  unsigned k = 0;
  while (e > 0) {
    const long digit = e % q;
    if (digit > 0) {
      const Poly f = key.frobenius(k);
      for (long t = 0; t < digit; ++t) x = x.mul_poly(f);
    }
    e /= q;
    ++k;
  }
  return x;
}

}  // namespace

Poly key_power(const Poly& key, long e) {
  Poly r = Poly::one(key.field());
  const long q = key.F().q();
  unsigned k = 0;
  while (e > 0) {
    const long digit = e % q;
    if (digit > 0) {
      const Poly f = key.frobenius(k);
      for (long t = 0; t < digit; ++t) r = r * f;
    }
    e /= q;
    ++k;
  }
  return r;
}

Poly expand_den(const FieldPtr& F, const DenMap& d) {
  Poly r = Poly::one(F);
  for (const auto& [key, e] : d) r = r * key_power(key, e);
  return r;
}

Poly expand_den(const DenMap& d) {
  if (d.empty()) throw DomainError("expand_den: empty map needs an explicit field");
  return expand_den(d.begin()->first.field(), d);
}

DenMap den_max(const DenMap& a, const DenMap& b) {
  DenMap r = a;
  for (const auto& [key, e] : b) {
    auto& slot = r[key];
    slot = std::max(slot, e);
  }
  return r;
}

AxElem rescale(const AxElem& num, const DenMap& from, const DenMap& target) {
  AxElem x = num;
  if (x.is_zero()) return x;
  for (const auto& [key, e] : target) {
    auto it = from.find(key);
    const long have = it == from.end() ? 0 : it->second;
    if (have > e) throw DomainError("rescale: target denominator does not dominate");
    x = mul_key_power(std::move(x), key, e - have);
  }
  return x;
}

// ---------------------------------------------------------------- Frac

void Frac::prune() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    if (it->second == 0) it = den_.erase(it);
    else ++it;
  }
}

Frac Frac::from_ext(const ExtElem& x) {
  if (x.den().is_one()) return Frac(x.num());
  return Frac(x.num(), DenMap{{x.den(), 1}});
}

ExtElem Frac::to_ext() const {
  if (den_.empty()) return ExtElem(num_);
  return ExtElem(num_, expand_den(num_.ext()->base(), den_));
}

Frac operator+(const Frac& a, const Frac& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return Frac(a.num_ + b.num_, a.den_);
  DenMap t = den_max(a.den_, b.den_);
  return Frac(rescale(a.num_, a.den_, t) + rescale(b.num_, b.den_, t), t);
}

Frac operator*(const Frac& a, const Frac& b) {
  if (a.is_zero() || b.is_zero()) return Frac(a.ext());
  DenMap d = a.den_;
  for (const auto& [key, e] : b.den_) d[key] += e;
  return Frac(a.num_ * b.num_, std::move(d));
}

Frac Frac::div_key(const Poly& key, long e) const {
  if (is_zero() || e == 0) return *this;
  DenMap d = den_;
  d[key] += e;
  return Frac(num_, std::move(d));
}

Frac Frac::frobenius(unsigned s) const {
  if (s == 0) return *this;
  long mult = 1;
  for (unsigned i = 0; i < s; ++i) mult *= num_.ext()->base()->q();
  DenMap d;
  for (const auto& [key, e] : den_) d[key] = e * mult;
  return Frac(num_.frobenius(s), std::move(d));
}

std::string Frac::to_string() const {
  std::ostringstream os;
  os << "(" << num_.to_string() << ")";
  if (den_.empty()) return os.str();
  os << "/(";
  bool first = true;
  for (const auto& [key, e] : den_) {
    if (!first) os << " * ";
    first = false;
    os << "(" << key.to_string() << ")";
    if (e != 1) os << "^" << e;
  }
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------- FracMatrix

FracMatrix::FracMatrix(std::size_t rows, std::size_t cols, const ExtPtr& K)
    : r_(rows), c_(cols), K_(K), a_(rows * cols, AxElem(K)) {}

FracMatrix FracMatrix::identity(std::size_t n, const ExtPtr& K) {
  FracMatrix m(n, n, K);
  for (std::size_t i = 0; i < n; ++i) m.num(i, i) = AxElem::from_poly(K, Poly::one(K->base()));
  return m;
}

FracMatrix FracMatrix::from_ext(const Matrix<ExtElem>& m) {
  FracMatrix out(m.rows(), m.cols(), m.zero().ext());
  DenMap t;
  for (const auto& x : m.data())
    if (!x.den().is_one()) t[x.den()] = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const ExtElem& x = m(i, j);
      DenMap from;
      if (!x.den().is_one()) from[x.den()] = 1;
      out.num(i, j) = rescale(x.num(), from, t);
    }
  out.den_ = std::move(t);
  return out;
}

bool FracMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

FracMatrix FracMatrix::operator-() const {
  FracMatrix r(*this);
  for (auto& x : r.a_) x = -x;
  return r;
}

FracMatrix FracMatrix::over(const DenMap& target) const {
  if (target == den_) return *this;
  FracMatrix r(*this);
  for (auto& x : r.a_) x = rescale(x, den_, target);
  r.den_ = target;
  return r;
}

FracMatrix operator+(const FracMatrix& a, const FracMatrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw DomainError("matrix dimension mismatch");
  if (a.den_ == b.den_) {
    FracMatrix r(a);
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
  }
  const DenMap t = den_max(a.den_, b.den_);
  FracMatrix r = a.over(t);
  const FracMatrix bb = b.over(t);
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += bb.a_[i];
  return r;
}

FracMatrix operator*(const FracMatrix& a, const FracMatrix& b) {
  if (a.c_ != b.r_) throw DomainError("matrix dimension mismatch");
  FracMatrix out(a.r_, b.c_, a.K_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      const AxElem& x = a.num(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_; ++j) {
        const AxElem& y = b.num(k, j);
        if (!y.is_zero()) out.num(i, j) += x * y;
      }
    }
  out.den_ = a.den_;
  for (const auto& [key, e] : b.den_) out.den_[key] += e;
  return out;
}

FracMatrix mul_sparse(const FracMatrix& a, const Matrix<Frac>& b) {
  if (a.c_ != b.rows()) throw DomainError("matrix dimension mismatch");
  DenMap bmax;
  for (const auto& x : b.data())
    if (!x.is_zero()) bmax = den_max(bmax, x.den());
  FracMatrix out(a.r_, b.cols(), a.K_);
  for (std::size_t k = 0; k < b.rows(); ++k)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const Frac& y = b(k, j);
      if (y.is_zero()) continue;
      const AxElem yn = rescale(y.num(), y.den(), bmax);
      for (std::size_t i = 0; i < a.r_; ++i) {
        const AxElem& x = a.num(i, k);
        if (!x.is_zero()) out.num(i, j) += x * yn;
      }
    }
  out.den_ = a.den_;
  for (const auto& [key, e] : bmax) out.den_[key] += e;
  return out;
}

FracMatrix mul_sparse(const Matrix<Frac>& a, const FracMatrix& b) {
  if (a.cols() != b.r_) throw DomainError("matrix dimension mismatch");
  DenMap amax;
  for (const auto& x : a.data())
    if (!x.is_zero()) amax = den_max(amax, x.den());
  FracMatrix out(a.rows(), b.c_, b.K_);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Frac& x = a(i, k);
      if (x.is_zero()) continue;
      const AxElem xn = rescale(x.num(), x.den(), amax);
      for (std::size_t j = 0; j < b.c_; ++j) {
        const AxElem& y = b.num(k, j);
        if (!y.is_zero()) out.num(i, j) += xn * y;
      }
    }
  out.den_ = b.den_;
  for (const auto& [key, e] : amax) out.den_[key] += e;
  return out;
}

FracMatrix FracMatrix::div_key(const Poly& key, long e) const {
  FracMatrix r(*this);
  if (e != 0) r.den_[key] += e;
  return r;
}

FracMatrix FracMatrix::frobenius(unsigned s) const {
  if (s == 0) return *this;
  long mult = 1;
  for (unsigned i = 0; i < s; ++i) mult *= K_->base()->q();
  FracMatrix r(*this);
  for (auto& x : r.a_) x = x.frobenius(s);
  for (auto& [key, e] : r.den_) e *= mult;
  return r;
}

FracMatrix& FracMatrix::reduce_known_factors() {
  if (is_zero()) {
    den_.clear();
    return *this;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    const Poly& key = it->first;
    while (it->second > 0) {
      std::vector<AxElem> next(a_.size());
      bool ok = true;
      for (std::size_t i = 0; i < a_.size() && ok; ++i) ok = a_[i].divide_exact(key, &next[i]);
      if (!ok) break;
      a_ = std::move(next);
      --it->second;
    }
    if (it->second == 0) it = den_.erase(it);
    else ++it;
  }
  return *this;
}

Matrix<ExtElem> FracMatrix::to_ext() const {
  Matrix<ExtElem> m(r_, c_, ExtElem(K_));
  const Poly D = expand_den(K_->base(), den_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(i, j) = ExtElem(num(i, j), D);
  return m;
}

}  // namespace cmpl
