#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cmpl/fq.hpp"

namespace cmpl {

/// Element of A = F_q[theta]. Coefficients little-endian with no trailing
/// zeros; the empty array is 0.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr f) : f_(std::move(f)) {}
  Poly(FieldPtr f, std::vector<Fq> c) : f_(std::move(f)), c_(std::move(c)) { trim(); }

  static Poly constant(const FieldPtr& f, Fq c);
  static Poly monomial(const FieldPtr& f, Fq c, std::size_t n);
  static Poly theta(const FieldPtr& f) { return monomial(f, 1, 1); }
  static Poly one(const FieldPtr& f) { return constant(f, 1); }

  const FieldPtr& field() const { return f_; }
  const FqField& F() const { return *f_; }

  long deg() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Fq lead() const { return c_.empty() ? 0 : c_.back(); }
  Fq coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<Fq>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }
  std::size_t nnz() const;
  /// Largest n with theta^n | f (0 for the zero polynomial).
  std::size_t low_degree() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& b);
  Poly& operator-=(const Poly& b);
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly scaled(Fq c) const;
  /// this * theta^n
  Poly shifted(std::size_t n) const;
  /// this mod theta^n
  Poly truncated(std::size_t n) const;
  /// Coefficient reversal as a polynomial of length `len` (theta^{len-1} f(1/theta)).
  Poly reversed(std::size_t len) const;
  Poly monic() const;
  Poly derivative() const;
  Poly pow(std::uint64_t n) const;
  /// f(theta^{q^s}) = f^{q^s}.
  Poly frobenius(unsigned s = 1) const;
  Fq eval(Fq x) const;

  /// a = qt*b + r with deg r < deg b. Throws DomainError on b = 0.
  static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
  friend Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }
  /// True when b divides a; the quotient is stored if `quotient` is non-null.
  static bool divides_exact(const Poly& a, const Poly& b, Poly* quotient);

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  /// Total order (degree, then coefficients from the top) for use as map keys.
  friend bool operator<(const Poly& a, const Poly& b);

  std::string to_string(const std::string& var = "theta") const;

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Fq>& raw() { return c_; }

 private:
  FieldPtr f_;
  std::vector<Fq> c_;
};

Poly gcd(Poly a, Poly b);
/// Returns g = gcd(a,b) (monic) and s,t with s*a + t*b = g.
struct XgcdResult {
  Poly g, s, t;
};
XgcdResult xgcd(const Poly& a, const Poly& b);
/// Inverse of a modulo c. Throws DomainError if gcd(a,c) != 1.
Poly modinv(const Poly& a, const Poly& c);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& a, std::uint64_t n, const Poly& m);
/// Multiplicity of v in f (f nonzero).
long ord(const Poly& f, const Poly& v, long cap = -1);

/// Raw multiplication kernel over F_q; exposed for benchmarks.
std::vector<Fq> mul_coeffs(const FqField& F, const std::vector<Fq>& a, const std::vector<Fq>& b);

}  // namespace cmpl
