#include "cmpl/inf_laurent.hpp"

#include <sstream>

#include "cmpl/errors.hpp"

namespace cmpl {

Poly series_inverse(const Poly& f, std::size_t n) {
  const FieldPtr& F = f.field();
  if (f.coeff(0) == 0) throw DomainError("series_inverse: zero constant term");
  Poly g = Poly::constant(F, F->inv(f.coeff(0)));
  std::size_t k = 1;
  const Poly two = Poly::constant(F, F->from_int(2));
  while (k < n) {
    k = std::min(2 * k, n);
    // g <- g (2 - f g) mod X^k
    const Poly fg = (f.truncated(k) * g).truncated(k);
    g = (g * (two - fg)).truncated(k);
  }
  return g.truncated(n);
}

InfLaurent InfLaurent::exact_zero(const FieldPtr& F) {
  InfLaurent x;
  x.F_ = F;
  x.mant_ = Poly(F);
  return x;
}

InfLaurent InfLaurent::zero_to(const FieldPtr& F, long prec) {
  InfLaurent x = exact_zero(F);
  x.prec_ = prec;
  x.val_ = prec - 1;
  return x;
}

InfLaurent InfLaurent::from_parts(const FieldPtr& F, long val, const Poly& mant, long prec) {
  if (val < prec) return zero_to(F, prec);
  Poly m = mant.truncated(static_cast<std::size_t>(val - prec + 1));
  if (m.is_zero()) return zero_to(F, prec);
  const long k = static_cast<long>(m.low_degree());
  InfLaurent x;
  x.F_ = F;
  x.prec_ = prec;
  x.val_ = val - k;
  if (k == 0) {
    x.mant_ = std::move(m);
  } else {
    const auto& c = m.coeffs();
    x.mant_ = Poly(F, std::vector<Fq>(c.begin() + k, c.end()));
  }
  return x;
}

InfLaurent InfLaurent::embed(const RatFunc& r, long prec) {
  const FieldPtr& F = r.field();
  if (r.is_zero()) return exact_zero(F);
  const long val = r.degree();
  if (r.is_polynomial()) {
    InfLaurent x;
    x.F_ = F;
    x.val_ = val;
    x.mant_ = r.num().reversed(static_cast<std::size_t>(val + 1));
    return x;
  }
  if (val < prec) return zero_to(F, prec);
  const std::size_t n = static_cast<std::size_t>(val - prec + 1);
  const Poly a = r.num().reversed(static_cast<std::size_t>(r.num().deg() + 1)).truncated(n);
  InfLaurent x;
  x.F_ = F;
  x.val_ = val;
  x.prec_ = prec;
  if (r.den().is_one()) {
    x.mant_ = a;
  } else {
    const Poly b = r.den().reversed(static_cast<std::size_t>(r.den().deg() + 1));
    x.mant_ = (a * series_inverse(b, n)).truncated(n);
  }
  return x;
}

Fq InfLaurent::coeff(long e) const {
  if (!is_exact() && e < prec_) throw PrecisionError("coefficient below the known precision");
  if (is_zero() || e > val_) return 0;
  return mant_.coeff(static_cast<std::size_t>(val_ - e));
}

InfLaurent InfLaurent::operator-() const {
  InfLaurent r(*this);
  r.mant_ = -r.mant_;
  return r;
}

InfLaurent operator+(const InfLaurent& a, const InfLaurent& b) {
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  const FieldPtr& F = a.F_;
  if (a.is_exact() && b.is_exact()) {
    const long top = std::max(a.val_, b.val_);
    Poly s = a.mant_.shifted(static_cast<std::size_t>(top - a.val_)) + b.mant_.shifted(static_cast<std::size_t>(top - b.val_));
    if (s.is_zero()) return InfLaurent::exact_zero(F);
    InfLaurent x = InfLaurent::from_parts(F, top, s, top - static_cast<long>(s.size()) + 1);
    x.prec_ = InfLaurent::kExact;
    return x;
  }
  const long P = std::max(a.prec_, b.prec_);
  const long top = std::max(a.is_zero() ? P - 1 : a.val_, b.is_zero() ? P - 1 : b.val_);
  if (top < P) return InfLaurent::zero_to(F, P);
  Poly s(F);
  if (!a.is_zero() && a.val_ >= P) s += a.mant_.shifted(static_cast<std::size_t>(top - a.val_));
  if (!b.is_zero() && b.val_ >= P) s += b.mant_.shifted(static_cast<std::size_t>(top - b.val_));
  return InfLaurent::from_parts(F, top, s, P);
}

InfLaurent operator*(const InfLaurent& a, const InfLaurent& b) {
  if (a.is_exact_zero()) return a;
  if (b.is_exact_zero()) return b;
  const FieldPtr& F = a.F_;
  if (a.is_zero() && b.is_zero()) return InfLaurent::zero_to(F, a.prec_ + b.prec_ - 1);
  if (a.is_zero()) return InfLaurent::zero_to(F, a.prec_ + b.val_);
  if (b.is_zero()) return InfLaurent::zero_to(F, b.prec_ + a.val_);
  const long val = a.val_ + b.val_;
  if (a.is_exact() && b.is_exact()) {
    InfLaurent x;
    x.F_ = F;
    x.val_ = val;
    x.mant_ = a.mant_ * b.mant_;
    return x;
  }
  const long n = std::min(a.count(), b.count());
  const std::size_t nn = static_cast<std::size_t>(n);
  return InfLaurent::from_parts(F, val, (a.mant_.truncated(nn) * b.mant_.truncated(nn)).truncated(nn), val - n + 1);
}

InfLaurent InfLaurent::inv() const {
  if (is_zero()) throw PrecisionError("inverse of a value indistinguishable from 0 at infinity");
  if (is_exact()) {
    if (!mant_.is_constant()) throw PrecisionError("inverse of an exact non-monomial needs a working precision");
    InfLaurent x(*this);
    x.val_ = -val_;
    x.mant_ = Poly::constant(F_, F_->inv(mant_.lead()));
    return x;
  }
  return inv(count());
}

InfLaurent InfLaurent::inv(long n) const {
  if (is_zero()) throw PrecisionError("inverse of a value indistinguishable from 0 at infinity");
  n = std::min(n, count());
  InfLaurent x;
  x.F_ = F_;
  x.val_ = -val_;
  x.prec_ = x.val_ - n + 1;
  x.mant_ = series_inverse(mant_, static_cast<std::size_t>(n));
  return x;
}

InfLaurent operator/(const InfLaurent& a, const InfLaurent& b) {
  if (b.is_exact() && !b.is_zero() && !b.mant_.is_constant()) {
    if (a.is_exact()) throw PrecisionError("quotient of exact values needs a working precision");
    if (a.is_zero()) return a * b.inv(1);
    return a * b.inv(a.count());
  }
  return a * b.inv();
}

InfLaurent InfLaurent::pow(std::uint64_t n) const {
  if (n == 0) return embed(RatFunc::constant(F_, 1), 0);
  InfLaurent r, base = *this;
  bool first = true;
  while (n) {
    if (n & 1) {
      r = first ? base : r * base;
      first = false;
    }
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

InfLaurent InfLaurent::scaled(Fq c) const {
  if (c == 0) return exact_zero(F_);
  InfLaurent r(*this);
  r.mant_ = r.mant_.scaled(c);
  return r;
}

InfLaurent InfLaurent::frobenius(unsigned s) const {
  if (s == 0 || is_exact_zero()) return *this;
  long m = 1;
  for (unsigned i = 0; i < s; ++i) m *= F_->q();
  if (is_exact()) {
    InfLaurent x(*this);
    x.val_ = val_ * m;
    x.mant_ = mant_.frobenius(s);
    return x;
  }
  if (is_zero()) return zero_to(F_, m * (prec_ - 1) + 1);
  InfLaurent x;
  x.F_ = F_;
  x.val_ = val_ * m;
  x.prec_ = x.val_ - count() * m + 1;
  x.mant_ = mant_.frobenius(s);
  return x;
}

InfLaurent InfLaurent::truncate(long p) const {
  if (is_exact_zero()) return zero_to(F_, p);
  if (!is_exact() && p <= prec_) return *this;
  if (is_zero()) return zero_to(F_, p);
  return from_parts(F_, val_, mant_, p);
}

bool agrees(const InfLaurent& a, const InfLaurent& b) { return (a - b).is_zero(); }

std::string InfLaurent::to_string() const {
  if (is_exact_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < mant_.size(); ++k) {
    const Fq c = mant_.coeff(k);
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << F_->to_string(c) << "*theta^" << val_ - static_cast<long>(k);
  }
  if (is_exact()) return os.str();
  if (!first) os << " + ";
  os << "O(theta^" << prec_ - 1 << ")";
  return os.str();
}

}  // namespace cmpl
