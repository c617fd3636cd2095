#include "cmpl/lsequence.hpp"

namespace cmpl {

Poly frobenius_key(const FieldPtr& F, unsigned j) {
  return Poly::theta(F).frobenius(j) - Poly::theta(F);
}

Poly LSequence::L(std::size_t i) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (L_.empty()) L_.push_back(Poly::one(F_));
  while (L_.size() <= i) {
    const unsigned j = static_cast<unsigned>(L_.size());
    L_.push_back(L_.back() * (-frobenius_key(F_, j)));
  }
  return L_[i];
}

Poly LSequence::D(std::size_t i) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (D_.empty()) D_.push_back(Poly::one(F_));
  while (D_.size() <= i) {
    const unsigned j = static_cast<unsigned>(D_.size());
    D_.push_back(frobenius_key(F_, j) * D_.back().frobenius());
  }
  return D_[i];
}

VAdicLSequence::VAdicLSequence(PlacePtr P, long rel_prec) : P_(std::move(P)), W_(rel_prec) {
  const FieldPtr& F = P_->field();
  tq_.push_back(P_->reduce(Poly::theta(F), W_ + 1));
  key_.push_back(VAdicNumber::exact_zero(P_));
  L_.push_back(VAdicNumber::from_poly(P_, Poly::one(F), W_));
}

void VAdicLSequence::extend(std::size_t i) const {
  const FieldPtr& F = P_->field();
  while (key_.size() <= i) {
    tq_.push_back(P_->reduce(tq_.back().frobenius(), W_ + 1));
    // ord_v(theta^(q^j) - theta) <= 1, so W + 1 absolute digits leave >= W relative ones.
    const Poly diff = tq_.back() - Poly::theta(F);
    VAdicNumber k = VAdicNumber::from_parts(P_, 0, diff, W_ + 1).with_rel_prec(W_);
    key_.push_back(k);
    L_.push_back(L_.back() * (-k));
  }
}

VAdicNumber VAdicLSequence::key(std::size_t j) const {
  extend(j);
  return key_[j];
}

VAdicNumber VAdicLSequence::L(std::size_t i) const {
  extend(i);
  return L_[i];
}

}  // namespace cmpl
