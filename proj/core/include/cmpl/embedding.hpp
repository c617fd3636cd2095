#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "cmpl/ext.hpp"
#include "cmpl/frac.hpp"
#include "cmpl/vadic.hpp"

namespace cmpl {

/// Simple roots of the minimal polynomial of K modulo v, in enumeration order
/// (residues ordered by their base-q code).
std::vector<Poly> residue_roots(const ExtPtr& K, const PlacePtr& P);

/// Lift a simple root r0 of m (mod v) to a root modulo v^n by Newton iteration.
Poly hensel_lift(const std::vector<Poly>& m, const PlacePtr& P, const Poly& r0, long n);

class VAdicEmbedding;
using EmbeddingPtr = std::shared_ptr<const VAdicEmbedding>;

/// An embedding K -> k_v sending x to a Hensel root of its minimal polynomial.
class VAdicEmbedding {
 public:
  static EmbeddingPtr make(const ExtPtr& K, const PlacePtr& P, std::size_t root_index = 0);

  const ExtPtr& ext() const { return K_; }
  const PlacePtr& place() const { return P_; }
  const Poly& residue_root() const { return r0_; }
  std::size_t root_index() const { return index_; }
  std::size_t root_count() const { return count_; }
  /// The chosen root modulo v^n.
  Poly root(long n) const;

  VAdicNumber embed(const Poly& a, long rel_prec) const { return VAdicNumber::from_poly(P_, a, rel_prec); }
  VAdicNumber embed(const RatFunc& a, long rel_prec) const { return VAdicNumber::from_ratfunc(P_, a, rel_prec); }
  VAdicNumber embed(const AxElem& a, long rel_prec) const;
  VAdicNumber embed(const ExtElem& a, long rel_prec) const;
  VAdicNumber embed(const Frac& a, long rel_prec) const;

 private:
  VAdicEmbedding() = default;
  ExtPtr K_;
  PlacePtr P_;
  Poly r0_;
  std::size_t index_ = 0;
  std::size_t count_ = 0;
  mutable std::mutex mu_;
  mutable Poly lifted_;
  mutable long lifted_prec_ = 0;
};

}  // namespace cmpl
