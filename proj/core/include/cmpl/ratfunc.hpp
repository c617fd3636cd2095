#pragma once

#include <string>

#include "cmpl/poly.hpp"

namespace cmpl {

/// Element of k = F_q(theta), kept reduced with a monic denominator.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(const FieldPtr& f) : num_(f), den_(Poly::one(f)) {}
  RatFunc(Poly num);  // NOLINT(google-explicit-constructor)
  RatFunc(Poly num, Poly den);

  static RatFunc constant(const FieldPtr& f, Fq c) { return RatFunc(Poly::constant(f, c)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldPtr& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// deg num - deg den (the infinity-adic valuation with sign flipped).
  long degree() const { return num_.deg() - den_.deg(); }
  /// max(deg num, deg den)
  long height() const { return std::max(num_.deg(), den_.deg()); }

  RatFunc operator-() const { return RatFunc(-num_, den_, true); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc inv() const;
  RatFunc pow(long n) const;
  RatFunc frobenius(unsigned s = 1) const { return RatFunc(num_.frobenius(s), den_.frobenius(s), true); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string to_string(const std::string& var = "theta") const;

 private:
  // Trusted constructor: caller guarantees reduced form.
  RatFunc(Poly num, Poly den, bool) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Poly num_;
  Poly den_;
};

}  // namespace cmpl
