#include "cmpl/ratfunc.hpp"

#include "cmpl/errors.hpp"

namespace cmpl {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::one(den_.field());
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
  const Fq l = den_.lead();
  if (l != 1) {
    const Fq li = den_.F().inv(l);
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
  }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ + b.num_);
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc(a.field() ? a.field() : b.field());
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
  // Cross-cancel first to keep the gcds small.
  Poly g1 = gcd(a.num_, b.den_);
  Poly g2 = gcd(b.num_, a.den_);
  Poly an = a.num_ / g1, bd = b.den_ / g1;
  Poly bn = b.num_ / g2, ad = a.den_ / g2;
  return RatFunc(an * bn, ad * bd, true);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

RatFunc RatFunc::inv() const {
  if (is_zero()) throw DomainError("inverse of zero in k");
  const Fq l = num_.lead();
  const Fq li = num_.F().inv(l);
  return RatFunc(den_.scaled(li), num_.scaled(li), true);
}

RatFunc RatFunc::pow(long n) const {
  if (n < 0) return inv().pow(-n);
  return RatFunc(num_.pow(static_cast<std::uint64_t>(n)), den_.pow(static_cast<std::uint64_t>(n)), true);
}

std::string RatFunc::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace cmpl
