#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace cmpl {

/// An element of F_q, encoded as the integer sum c_i p^i of its coordinates
/// in the power basis 1, g, ..., g^{e-1} (g a root of the defining modulus).
using Fq = std::uint32_t;

class FqField;
using FieldPtr = std::shared_ptr<const FqField>;

/// The finite field F_q with q = p^e, given by an explicit irreducible
/// modulus over F_p. Immutable once built; share it through FieldPtr.
class FqField {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  /// Builds F_{p^e}. `modulus` holds the monic defining polynomial over F_p,
  /// low degree first (length e+1). An empty modulus picks the
  /// lexicographically smallest monic irreducible of degree e.
  static FieldPtr make(std::uint32_t p, std::uint32_t e = 1, std::vector<std::uint32_t> modulus = {});

  /// Convenience: F_q for a prime power q with the default modulus.
  static FieldPtr of_order(std::uint64_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Fq zero() const { return 0; }
  Fq one() const { return 1; }
  /// Image of an integer in the prime subfield.
  Fq from_int(long long n) const;
  /// Element with base-p coordinates `digits` (length <= e).
  Fq from_digits(const std::vector<std::uint32_t>& digits) const;
  std::vector<std::uint32_t> digits(Fq a) const;
  /// The generator g of F_q over F_p (equals 1 when e = 1).
  Fq generator() const { return e_ == 1 ? 1 : p_; }

  Fq add(Fq a, Fq b) const {
    if (e_ == 1) {
      const Fq s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_ext(a, b);
  }
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq neg(Fq a) const {
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_ext(a);
  }
  Fq mul(Fq a, Fq b) const {
    if (e_ == 1) return static_cast<Fq>((std::uint64_t{a} * b) % p_);
    return mul_ext(a, b);
  }
  /// Multiplicative inverse; throws DomainError on zero.
  Fq inv(Fq a) const;
  Fq pow(Fq a, std::uint64_t n) const;

  bool is_valid(Fq a) const { return a < q_; }
  bool same_as(const FqField& other) const {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }

  std::string to_string(Fq a) const;

 private:
  FqField(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

  Fq add_ext(Fq a, Fq b) const;
  Fq neg_ext(Fq a) const;
  Fq mul_ext(Fq a, Fq b) const;
  Fq mul_slow(Fq a, Fq b) const;

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  // Lookup tables for e > 1 and small q; computed from the modulus.
  std::vector<Fq> add_table_;
  std::vector<Fq> mul_table_;
  std::vector<Fq> inv_table_;
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

}  // namespace cmpl
