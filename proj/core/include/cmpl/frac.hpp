#pragma once

#include <map>
#include <string>
#include <vector>

#include "cmpl/ext.hpp"
#include "cmpl/matrix.hpp"

namespace cmpl {

/// Factored denominator: monic polynomial -> exponent. Keys need not be
/// coprime; the represented denominator is the product key^exponent.
using DenMap = std::map<Poly, long>;

/// key^e, expanding e in base q so that each factor key^{q^k} = key(theta^{q^k})
/// keeps the sparsity of the key.
Poly key_power(const Poly& key, long e);
/// Product over the map.
Poly expand_den(const DenMap& d);
Poly expand_den(const FieldPtr& F, const DenMap& d);

/// Element of K with a lazily factored denominator. Sums take the maximal
/// exponent per key and never call gcd, which keeps high-degree recurrences
/// (theta^{q^j} - theta factors) cheap.
class Frac {
 public:
  Frac() = default;
  explicit Frac(const ExtPtr& K) : num_(K) {}
  explicit Frac(AxElem num, DenMap den = {}) : num_(std::move(num)), den_(std::move(den)) { prune(); }
  static Frac from_ext(const ExtElem& x);

  const AxElem& num() const { return num_; }
  const DenMap& den() const { return den_; }
  const ExtPtr& ext() const { return num_.ext(); }
  bool is_zero() const { return num_.is_zero(); }

  ExtElem to_ext() const;

  Frac operator-() const { return Frac(-num_, den_); }
  friend Frac operator+(const Frac& a, const Frac& b);
  friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }
  friend Frac operator*(const Frac& a, const Frac& b);
  Frac& operator+=(const Frac& b) { return *this = *this + b; }
  Frac& operator-=(const Frac& b) { return *this = *this - b; }
  /// Divide by key^e (key monic).
  Frac div_key(const Poly& key, long e) const;
  Frac frobenius(unsigned s = 1) const;
  Frac scaled(Fq c) const { return Frac(num_.scaled(c), den_); }
  Frac mul_poly(const Poly& p) const { return Frac(num_.mul_poly(p), den_); }

  /// Exact equality (cross multiplication over the union of keys).
  friend bool operator==(const Frac& a, const Frac& b) { return (a - b).is_zero(); }
  friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void prune();
  AxElem num_;
  DenMap den_;
};

/// Rescale numerators so that they sit over `target` (which must dominate
/// `from` keywise).
AxElem rescale(const AxElem& num, const DenMap& from, const DenMap& target);
DenMap den_max(const DenMap& a, const DenMap& b);

/// Matrix over K with one shared factored denominator.
class FracMatrix {
 public:
  FracMatrix() = default;
  FracMatrix(std::size_t rows, std::size_t cols, const ExtPtr& K);
  static FracMatrix identity(std::size_t n, const ExtPtr& K);
  static FracMatrix from_ext(const Matrix<ExtElem>& m);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  const ExtPtr& ext() const { return K_; }
  const DenMap& den() const { return den_; }
  AxElem& num(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const AxElem& num(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  Frac entry(std::size_t i, std::size_t j) const { return Frac(num(i, j), den_); }
  bool is_zero() const;

  FracMatrix operator-() const;
  friend FracMatrix operator+(const FracMatrix& a, const FracMatrix& b);
  friend FracMatrix operator-(const FracMatrix& a, const FracMatrix& b) { return a + (-b); }
  friend FracMatrix operator*(const FracMatrix& a, const FracMatrix& b);
  FracMatrix div_key(const Poly& key, long e) const;
  FracMatrix frobenius(unsigned s = 1) const;
  /// Bring numerators over a larger denominator.
  FracMatrix over(const DenMap& target) const;
  /// Divide out key factors that divide every numerator. Returns *this.
  FracMatrix& reduce_known_factors();

  Matrix<ExtElem> to_ext() const;

 private:
  std::size_t r_ = 0, c_ = 0;
  ExtPtr K_;
  std::vector<AxElem> a_;
  DenMap den_;
  friend FracMatrix mul_sparse(const FracMatrix&, const Matrix<Frac>&);
  friend FracMatrix mul_sparse(const Matrix<Frac>&, const FracMatrix&);
};

/// Product with a matrix whose entries are individual Fracs (typically sparse).
FracMatrix mul_sparse(const FracMatrix& a, const Matrix<Frac>& b);
FracMatrix mul_sparse(const Matrix<Frac>& a, const FracMatrix& b);

}  // namespace cmpl
