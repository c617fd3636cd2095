#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cmpl/ratfunc.hpp"

namespace cmpl {

class VPlace;
using PlacePtr = std::shared_ptr<const VPlace>;

/// A finite place of k: a monic irreducible v in A, with cached powers.
class VPlace {
 public:
  static PlacePtr make(const Poly& v);

  const Poly& v() const { return v_; }
  long deg() const { return v_.deg(); }
  const FieldPtr& field() const { return v_.field(); }
  bool is_theta() const { return is_theta_; }
  /// v^n.
  Poly power(long n) const;
  /// a mod v^n.
  Poly reduce(const Poly& a, long n) const;
  /// ord_v(a), stopping at `cap`; returns cap when v^cap | a (including a = 0).
  long ord(const Poly& a, long cap) const;
  /// a / v^n, assuming v^n | a.
  Poly divide_power(const Poly& a, long n) const;
  /// Size of the residue field A/v.
  std::uint64_t residue_order() const;

 private:
  explicit VPlace(Poly v);
  Poly v_;
  bool is_theta_ = false;
  mutable std::mutex mu_;
  mutable std::vector<Poly> powers_;
};

bool is_irreducible(const Poly& v);

/// Element of k_v (or of k-bar inside it) to finite precision:
/// x = v^val * (unit + O(v^prec)), unit a v-adic unit reduced mod v^prec.
/// Exact zero uses val = kInf. A value with prec = 0 is "zero to absolute
/// precision val": only ord_v(x) >= val is known.
class VAdicNumber {
 public:
  static constexpr long kInf = 1L << 60;

  VAdicNumber() = default;
  static VAdicNumber exact_zero(const PlacePtr& P);
  static VAdicNumber zero_to(const PlacePtr& P, long abs_prec);
  /// Polynomial embedded with `rel_prec` digits after its leading v-adic digit.
  static VAdicNumber from_poly(const PlacePtr& P, const Poly& a, long rel_prec);
  static VAdicNumber from_ratfunc(const PlacePtr& P, const RatFunc& x, long rel_prec);
  /// Build from (val, unit) where unit may not yet be coprime to v.
  static VAdicNumber from_parts(const PlacePtr& P, long val, const Poly& unit, long prec);

  const PlacePtr& place() const { return P_; }
  long val() const { return val_; }
  const Poly& unit() const { return unit_; }
  long prec() const { return prec_; }
  /// Absolute precision: x is known modulo v^abs_prec().
  long abs_prec() const { return is_exact_zero() ? kInf : val_ + prec_; }
  bool is_exact_zero() const { return val_ >= kInf; }
  /// Zero to the recorded precision (includes exact zero).
  bool is_zero() const { return is_exact_zero() || prec_ == 0; }

  VAdicNumber operator-() const;
  friend VAdicNumber operator+(const VAdicNumber& a, const VAdicNumber& b);
  friend VAdicNumber operator-(const VAdicNumber& a, const VAdicNumber& b) { return a + (-b); }
  friend VAdicNumber operator*(const VAdicNumber& a, const VAdicNumber& b);
  friend VAdicNumber operator/(const VAdicNumber& a, const VAdicNumber& b);
  VAdicNumber& operator+=(const VAdicNumber& b) { return *this = *this + b; }
  VAdicNumber& operator-=(const VAdicNumber& b) { return *this = *this - b; }
  VAdicNumber& operator*=(const VAdicNumber& b) { return *this = *this * b; }
  VAdicNumber pow(std::uint64_t n) const;
  VAdicNumber scaled(Fq c) const;
  /// q^s-th power; relative precision grows by q^s but is capped at `cap`.
  VAdicNumber frobenius(unsigned s, long cap) const;
  /// Forget digits beyond absolute precision A. Exact zero stays exact.
  VAdicNumber with_abs_prec(long A) const;
  VAdicNumber with_rel_prec(long n) const;

  /// The reduction of x modulo v^A as a polynomial (requires abs_prec >= A, val >= 0).
  Poly mod_power(long A) const;
  /// True when a and b agree to the smaller of their absolute precisions.
  friend bool agrees(const VAdicNumber& a, const VAdicNumber& b);

  std::string to_string() const;

 private:
  PlacePtr P_;
  long val_ = kInf;
  Poly unit_;
  long prec_ = 0;
};

}  // namespace cmpl
