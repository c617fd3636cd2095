#pragma once

#include <string>

#include "cmpl/ratfunc.hpp"

namespace cmpl {

/// Element of k_inf = F_q((1/theta)) known down to the exponent `prec`:
/// x = theta^val * M(1/theta) + O(theta^(prec-1)), with M(0) != 0.
/// The mantissa M holds the coefficients of theta^val, theta^(val-1), ...
/// A value with no known nonzero coefficient is "zero to precision prec"
/// (its degree is below prec). Laurent polynomials, including 0, can be held
/// exactly with prec = kExact.
class InfLaurent {
 public:
  static constexpr long kExact = -(1L << 60);

  InfLaurent() = default;
  static InfLaurent exact_zero(const FieldPtr& F);
  static InfLaurent zero_to(const FieldPtr& F, long prec);
  /// Expansion of x, keeping every coefficient of theta^e with e >= prec.
  /// Polynomials are embedded exactly.
  static InfLaurent embed(const RatFunc& x, long prec);
  static InfLaurent from_parts(const FieldPtr& F, long val, const Poly& mant, long prec);

  const FieldPtr& field() const { return F_; }
  bool is_exact() const { return prec_ == kExact; }
  bool is_exact_zero() const { return is_exact() && mant_.is_zero(); }
  bool is_zero() const { return mant_.is_zero(); }
  long val() const { return val_; }
  long prec() const { return prec_; }
  /// Number of known coefficients counted from the leading one.
  long count() const { return is_zero() ? 0 : is_exact() ? kUnbounded : val_ - prec_ + 1; }
  static constexpr long kUnbounded = 1L << 60;
  const Poly& mantissa() const { return mant_; }
  /// Coefficient of theta^e.
  Fq coeff(long e) const;
  /// Degree of x, or the bound prec - 1 when x is zero to precision.
  long degree() const { return is_zero() ? (is_exact_zero() ? kExact : prec_ - 1) : val_; }

  InfLaurent operator-() const;
  friend InfLaurent operator+(const InfLaurent& a, const InfLaurent& b);
  friend InfLaurent operator-(const InfLaurent& a, const InfLaurent& b) { return a + (-b); }
  friend InfLaurent operator*(const InfLaurent& a, const InfLaurent& b);
  friend InfLaurent operator/(const InfLaurent& a, const InfLaurent& b);
  InfLaurent& operator+=(const InfLaurent& b) { return *this = *this + b; }
  InfLaurent& operator-=(const InfLaurent& b) { return *this = *this - b; }
  InfLaurent& operator*=(const InfLaurent& b) { return *this = *this * b; }
  InfLaurent inv() const;
  /// Inverse keeping at most n leading coefficients.
  InfLaurent inv(long n) const;
  InfLaurent pow(std::uint64_t n) const;
  InfLaurent scaled(Fq c) const;
  /// q^s-th power.
  InfLaurent frobenius(unsigned s = 1) const;
  /// Drop every coefficient below theta^p.
  InfLaurent truncate(long p) const;

  friend bool agrees(const InfLaurent& a, const InfLaurent& b);
  std::string to_string() const;

 private:
  FieldPtr F_;
  long val_ = 0;
  Poly mant_;
  long prec_ = kExact;
};

/// Power series inverse of f (f(0) != 0) modulo X^n.
Poly series_inverse(const Poly& f, std::size_t n);

}  // namespace cmpl
