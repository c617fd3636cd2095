#include "cmpl/vadic.hpp"

#include <sstream>

#include "cmpl/errors.hpp"

namespace cmpl {

bool is_irreducible(const Poly& v) {
  if (v.deg() < 1) return false;
  const long n = v.deg();
  const std::uint64_t q = v.F().q();
  const Poly th = Poly::theta(v.field());
  // theta^{q^k} mod v for k = 0..n
  std::vector<Poly> fr{th % v};
  for (long k = 1; k <= n; ++k) fr.push_back(powmod(fr.back(), q, v));
  if (fr[n] != th % v) return false;
  for (long r = 2; r <= n; ++r) {
    if (n % r != 0) continue;
    bool prime = true;
    for (long d = 2; d * d <= r; ++d)
      if (r % d == 0) prime = false;
    if (!prime) continue;
    Poly h = fr[n / r] - th;
    if (h.is_zero() || !gcd(h, v).is_one()) return false;
  }
  return true;
}

// ---------------------------------------------------------------- VPlace

VPlace::VPlace(Poly v) : v_(std::move(v)) {
  is_theta_ = v_.deg() == 1 && v_.coeff(0) == 0;
  powers_.push_back(Poly::one(v_.field()));
  powers_.push_back(v_);
}

PlacePtr VPlace::make(const Poly& v) {
  if (!v.is_monic()) throw DomainError("place v must be monic");
  if (!is_irreducible(v)) throw DomainError("place v = " + v.to_string() + " is not irreducible");
  return PlacePtr(new VPlace(v));
}

Poly VPlace::power(long n) const {
  if (n < 0) throw DomainError("negative power of v");
  if (is_theta_) return Poly::monomial(v_.field(), 1, static_cast<std::size_t>(n));
  std::lock_guard<std::mutex> lock(mu_);
  while (static_cast<long>(powers_.size()) <= n) powers_.push_back(powers_.back() * v_);
  return powers_[static_cast<std::size_t>(n)];
}

Poly VPlace::reduce(const Poly& a, long n) const {
  if (n <= 0) return Poly(v_.field());
  if (is_theta_) return a.truncated(static_cast<std::size_t>(n));
  if (a.deg() < n * deg()) return a;
  return a % power(n);
}

long VPlace::ord(const Poly& a, long cap) const {
  if (cap <= 0) return 0;
  if (a.is_zero()) return cap;
  if (is_theta_) return std::min<long>(static_cast<long>(a.low_degree()), cap);
  Poly cur = reduce(a, cap);
  if (cur.is_zero()) return cap;
  long k = 0;
  while (k < cap) {
    auto [qt, r] = Poly::divrem(cur, v_);
    if (!r.is_zero()) break;
    cur = std::move(qt);
    ++k;
  }
  return k;
}

Poly VPlace::divide_power(const Poly& a, long n) const {
  if (n <= 0) return a;
  if (is_theta_) {
    const auto& c = a.coeffs();
    if (static_cast<long>(c.size()) <= n) return Poly(v_.field());
    return Poly(v_.field(), std::vector<Fq>(c.begin() + n, c.end()));
  }
  return a / power(n);
}

std::uint64_t VPlace::residue_order() const {
  std::uint64_t r = 1;
  for (long i = 0; i < deg(); ++i) r *= v_.F().q();
  return r;
}

// ---------------------------------------------------------------- VAdicNumber

VAdicNumber VAdicNumber::exact_zero(const PlacePtr& P) {
  VAdicNumber x;
  x.P_ = P;
  x.unit_ = Poly(P->field());
  return x;
}

VAdicNumber VAdicNumber::zero_to(const PlacePtr& P, long abs_prec) {
  VAdicNumber x = exact_zero(P);
  x.val_ = abs_prec;
  x.prec_ = 0;
  return x;
}

VAdicNumber VAdicNumber::from_parts(const PlacePtr& P, long val, const Poly& unit, long prec) {
  if (prec <= 0) return zero_to(P, val + std::max(prec, 0L));
  Poly u = P->reduce(unit, prec);
  if (u.is_zero()) return zero_to(P, val + prec);
  const long k = P->ord(u, prec);
  VAdicNumber x;
  x.P_ = P;
  x.val_ = val + k;
  x.prec_ = prec - k;
  x.unit_ = k == 0 ? u : P->reduce(P->divide_power(u, k), x.prec_);
  return x;
}

VAdicNumber VAdicNumber::from_poly(const PlacePtr& P, const Poly& a, long rel_prec) {
  if (a.is_zero()) return exact_zero(P);
  long A = rel_prec + 1;
  for (;;) {
    Poly r = P->reduce(a, A);
    if (!r.is_zero()) {
      const long k = P->ord(r, A);
      if (A - k >= rel_prec) {
        VAdicNumber x;
        x.P_ = P;
        x.val_ = k;
        x.prec_ = rel_prec;
        x.unit_ = P->reduce(P->divide_power(r, k), rel_prec);
        return x;
      }
      A = k + rel_prec;
    } else {
      A *= 2;
    }
  }
}

VAdicNumber VAdicNumber::from_ratfunc(const PlacePtr& P, const RatFunc& x, long rel_prec) {
  if (x.is_zero()) return exact_zero(P);
  VAdicNumber n = from_poly(P, x.num(), rel_prec);
  if (x.den().is_one()) return n;
  return n / from_poly(P, x.den(), rel_prec);
}

VAdicNumber VAdicNumber::operator-() const {
  VAdicNumber r(*this);
  r.unit_ = -r.unit_;
  return r;
}

VAdicNumber operator+(const VAdicNumber& a, const VAdicNumber& b) {
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  const PlacePtr& P = a.P_;
  const long A = std::min(a.abs_prec(), b.abs_prec());
  const long m = std::min(a.val_, b.val_);
  if (m >= A) return VAdicNumber::zero_to(P, A);
  const long n = A - m;
  Poly s(P->field());
  if (a.prec_ > 0 && a.val_ < A) s += a.val_ == m ? a.unit_ : a.unit_ * P->power(a.val_ - m);
  if (b.prec_ > 0 && b.val_ < A) s += b.val_ == m ? b.unit_ : b.unit_ * P->power(b.val_ - m);
  return VAdicNumber::from_parts(P, m, s, n);
}

VAdicNumber operator*(const VAdicNumber& a, const VAdicNumber& b) {
  if (a.is_exact_zero()) return a;
  if (b.is_exact_zero()) return b;
  const long prec = std::min(a.prec_, b.prec_);
  if (prec == 0) return VAdicNumber::zero_to(a.P_, a.val_ + b.val_);
  VAdicNumber x;
  x.P_ = a.P_;
  x.val_ = a.val_ + b.val_;
  x.prec_ = prec;
  x.unit_ = a.P_->reduce(a.unit_ * b.unit_, prec);
  return x;
}

VAdicNumber operator/(const VAdicNumber& a, const VAdicNumber& b) {
  if (b.is_zero()) throw PrecisionError("v-adic division by a value indistinguishable from 0");
  if (a.is_exact_zero()) return a;
  if (a.prec_ == 0) return VAdicNumber::zero_to(a.P_, a.val_ - b.val_);
  const long prec = std::min(a.prec_, b.prec_);
  VAdicNumber x;
  x.P_ = a.P_;
  x.val_ = a.val_ - b.val_;
  x.prec_ = prec;
  const Poly mod = a.P_->power(prec);
  const Poly bu = a.P_->reduce(b.unit_, prec);
  x.unit_ = a.P_->reduce(a.unit_ * (bu.is_constant() ? Poly::constant(bu.field(), bu.F().inv(bu.lead())) : modinv(bu, mod)), prec);
  return x;
}

VAdicNumber VAdicNumber::pow(std::uint64_t n) const {
  if (n == 0) return from_parts(P_, 0, Poly::one(P_->field()), std::max(prec_, 1L));
  VAdicNumber r, base = *this;
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

VAdicNumber VAdicNumber::scaled(Fq c) const {
  if (c == 0) return exact_zero(P_);
  VAdicNumber r(*this);
  r.unit_ = r.unit_.scaled(c);
  return r;
}

VAdicNumber VAdicNumber::frobenius(unsigned s, long cap) const {
  if (s == 0 || is_exact_zero()) return *this;
  long mult = 1;
  for (unsigned i = 0; i < s; ++i) mult *= P_->field()->q();
  if (prec_ == 0) return zero_to(P_, val_ * mult);
  const long p = std::min(prec_ * mult, std::max(cap, prec_));
  VAdicNumber x;
  x.P_ = P_;
  x.val_ = val_ * mult;
  x.prec_ = p;
  x.unit_ = P_->reduce(unit_.frobenius(s), p);
  return x;
}

VAdicNumber VAdicNumber::with_abs_prec(long A) const {
  if (is_exact_zero()) return *this;
  if (val_ >= A) return zero_to(P_, A);
  if (val_ + prec_ <= A) return *this;
  return with_rel_prec(A - val_);
}

VAdicNumber VAdicNumber::with_rel_prec(long n) const {
  if (is_zero() || n >= prec_) return *this;
  if (n <= 0) return zero_to(P_, val_);
  VAdicNumber x(*this);
  x.prec_ = n;
  x.unit_ = P_->reduce(unit_, n);
  return x;
}

Poly VAdicNumber::mod_power(long A) const {
  if (is_exact_zero()) return Poly(P_->field());
  if (abs_prec() < A) throw PrecisionError("value not known to the requested absolute precision");
  if (val_ < 0) throw DomainError("mod_power of a non-integral v-adic value");
  if (val_ >= A) return Poly(P_->field());
  return P_->reduce(unit_ * P_->power(val_), A);
}

bool agrees(const VAdicNumber& a, const VAdicNumber& b) { return (a - b).is_zero(); }

std::string VAdicNumber::to_string() const {
  if (is_exact_zero()) return "0";
  std::ostringstream os;
  if (prec_ == 0) {
    os << "O(v^" << val_ << ")";
    return os.str();
  }
  os << "v^" << val_ << " * (" << unit_.to_string() << ") + O(v^" << val_ + prec_ << ")";
  return os.str();
}

}  // namespace cmpl
