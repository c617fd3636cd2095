#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cmpl/ratfunc.hpp"

namespace cmpl {

class ExtField;
using ExtPtr = std::shared_ptr<const ExtField>;

/// Element of A[x]/(m): power-basis coordinates with coefficients in A.
class AxElem {
 public:
  AxElem() = default;
  explicit AxElem(const ExtPtr& K);
  AxElem(const ExtPtr& K, std::vector<Poly> c);
  static AxElem from_poly(const ExtPtr& K, const Poly& a);

  const ExtPtr& ext() const { return K_; }
  const std::vector<Poly>& coords() const { return c_; }
  const Poly& coord(std::size_t j) const { return c_[j]; }
  bool is_zero() const;
  /// True when the element lies in A (all higher coordinates vanish).
  bool is_scalar() const;
  /// Largest coordinate degree (-1 for zero).
  long max_deg() const;

  AxElem operator-() const;
  AxElem& operator+=(const AxElem& b);
  AxElem& operator-=(const AxElem& b);
  friend AxElem operator+(AxElem a, const AxElem& b) { return a += b; }
  friend AxElem operator-(AxElem a, const AxElem& b) { return a -= b; }
  friend AxElem operator*(const AxElem& a, const AxElem& b);
  AxElem mul_poly(const Poly& a) const;
  AxElem scaled(Fq c) const;
  /// Coefficientwise exact division by a polynomial; false if it does not divide.
  bool divide_exact(const Poly& d, AxElem* out) const;
  /// Raise to the q^s-th power.
  AxElem frobenius(unsigned s = 1) const;
  AxElem pow(std::uint64_t n) const;
  /// gcd of all coordinates (monic; zero for the zero element).
  Poly content() const;

  friend bool operator==(const AxElem& a, const AxElem& b) { return a.c_ == b.c_; }
  friend bool operator!=(const AxElem& a, const AxElem& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void reduce_high(std::vector<Poly>& wide) const;
  ExtPtr K_;
  std::vector<Poly> c_;
  friend class ExtField;
};

/// A finite extension K = k[x]/(m) with m monic of degree n <= 4 and with
/// coefficients in A. The trivial extension K = k is m = x.
class ExtField {
 public:
  /// `m` holds m_0..m_n (m_n = 1). Verifies irreducibility over k.
  static ExtPtr make(const FieldPtr& F, std::vector<Poly> m);
  static ExtPtr trivial(const FieldPtr& F);

  const FieldPtr& base() const { return F_; }
  std::size_t degree() const { return m_.size() - 1; }
  bool is_trivial() const { return degree() == 1 && m_[0].is_zero(); }
  const std::vector<Poly>& minpoly() const { return m_; }
  /// x^{q*j} mod m for j < n.
  const std::vector<AxElem>& frobenius_powers() const { return xq_; }
  bool same_as(const ExtField& o) const { return F_->same_as(*o.F_) && m_ == o.m_; }
  std::string minpoly_string() const;

 private:
  ExtField(FieldPtr F, std::vector<Poly> m) : F_(std::move(F)), m_(std::move(m)) {}
  FieldPtr F_;
  std::vector<Poly> m_;
  std::vector<AxElem> xq_;
};

void check_same_ext(const ExtPtr& a, const ExtPtr& b);

/// Element of K: numerator in A[x]/(m) over a monic denominator in A, with
/// gcd(content(num), den) = 1 so that the representation is canonical.
class ExtElem {
 public:
  ExtElem() = default;
  explicit ExtElem(const ExtPtr& K);
  ExtElem(AxElem num, Poly den);
  explicit ExtElem(AxElem num);
  static ExtElem from_ratfunc(const ExtPtr& K, const RatFunc& r);
  static ExtElem from_poly(const ExtPtr& K, const Poly& p) { return ExtElem(AxElem::from_poly(K, p)); }
  static ExtElem generator(const ExtPtr& K);
  /// Build from power-basis coordinates in k.
  static ExtElem from_coords(const ExtPtr& K, const std::vector<RatFunc>& coords);

  const ExtPtr& ext() const { return num_.ext(); }
  const FieldPtr& field() const { return den_.field(); }
  const AxElem& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool in_base() const { return num_.is_scalar(); }
  /// Value in k when the element lies in the base field.
  RatFunc to_ratfunc() const;
  std::vector<RatFunc> coords() const;

  ExtElem operator-() const;
  friend ExtElem operator+(const ExtElem& a, const ExtElem& b);
  friend ExtElem operator-(const ExtElem& a, const ExtElem& b) { return a + (-b); }
  friend ExtElem operator*(const ExtElem& a, const ExtElem& b);
  friend ExtElem operator/(const ExtElem& a, const ExtElem& b) { return a * b.inv(); }
  ExtElem& operator+=(const ExtElem& b) { return *this = *this + b; }
  ExtElem& operator-=(const ExtElem& b) { return *this = *this - b; }
  ExtElem& operator*=(const ExtElem& b) { return *this = *this * b; }
  ExtElem inv() const;
  ExtElem pow(long n) const;
  ExtElem frobenius(unsigned s = 1) const;
  ExtElem scaled(Fq c) const;

  friend bool operator==(const ExtElem& a, const ExtElem& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const ExtElem& a, const ExtElem& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void normalize();
  AxElem num_;
  Poly den_;
};

}  // namespace cmpl
