#pragma once

#include <vector>

#include "cmpl/ext.hpp"
#include "cmpl/matrix.hpp"

namespace cmpl {

using ExtMatrix = Matrix<ExtElem>;
using ExtVector = std::vector<ExtElem>;

ExtMatrix ext_zero_matrix(std::size_t rows, std::size_t cols, const ExtPtr& K);
ExtMatrix ext_identity(std::size_t n, const ExtPtr& K);
/// Entrywise q^s-th power.
ExtMatrix twist(const ExtMatrix& m, unsigned s);
ExtVector twist(const ExtVector& v, unsigned s);

/// Twisted polynomial sum_i alpha_i tau^i with d x d coefficients over K,
/// subject to tau alpha = alpha^(1) tau.
class TauMatrixPoly {
 public:
  TauMatrixPoly() = default;
  TauMatrixPoly(std::size_t d, const ExtPtr& K) : d_(d), K_(K) {}
  explicit TauMatrixPoly(std::vector<ExtMatrix> coeffs);
  static TauMatrixPoly constant(const ExtMatrix& a0);

  std::size_t dim() const { return d_; }
  const ExtPtr& ext() const { return K_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<ExtMatrix>& coeffs() const { return c_; }
  ExtMatrix coeff(std::size_t i) const;
  /// The tau^0 coefficient.
  ExtMatrix partial() const { return coeff(0); }

  friend TauMatrixPoly operator+(const TauMatrixPoly& a, const TauMatrixPoly& b);
  friend TauMatrixPoly operator-(const TauMatrixPoly& a, const TauMatrixPoly& b);
  friend TauMatrixPoly operator*(const TauMatrixPoly& a, const TauMatrixPoly& b);
  friend bool operator==(const TauMatrixPoly& a, const TauMatrixPoly& b) {
    return a.d_ == b.d_ && a.c_ == b.c_;
  }

  /// Evaluate on a point: sum_i alpha_i w^(i).
  ExtVector apply(const ExtVector& w) const;

 private:
  void trim();
  std::size_t d_ = 0;
  ExtPtr K_;
  std::vector<ExtMatrix> c_;
};

}  // namespace cmpl
