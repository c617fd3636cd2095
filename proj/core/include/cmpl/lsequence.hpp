#pragma once

#include <mutex>
#include <vector>

#include "cmpl/vadic.hpp"

namespace cmpl {

/// theta^(q^j) - theta.
Poly frobenius_key(const FieldPtr& F, unsigned j);

/// L_i = (theta - theta^q) ... (theta - theta^(q^i)) and
/// D_i = (theta^(q^i) - theta) D_(i-1)^(1), cached per field.
class LSequence {
 public:
  explicit LSequence(FieldPtr F) : F_(std::move(F)) {}
  Poly L(std::size_t i) const;
  Poly D(std::size_t i) const;
  const FieldPtr& field() const { return F_; }

 private:
  FieldPtr F_;
  mutable std::mutex mu_;
  mutable std::vector<Poly> L_, D_;
};

/// v-adic images of theta^(q^j) - theta and L_i without expanding them in A.
class VAdicLSequence {
 public:
  VAdicLSequence(PlacePtr P, long rel_prec);
  /// theta^(q^j) - theta with `rel_prec` relative digits.
  VAdicNumber key(std::size_t j) const;
  VAdicNumber L(std::size_t i) const;
  long rel_prec() const { return W_; }
  const PlacePtr& place() const { return P_; }

 private:
  void extend(std::size_t i) const;
  PlacePtr P_;
  long W_;
  mutable std::vector<Poly> tq_;  // theta^(q^j) mod v^(W+1)
  mutable std::vector<VAdicNumber> key_, L_;
};

}  // namespace cmpl
