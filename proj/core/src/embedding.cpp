#include "cmpl/embedding.hpp"

#include "cmpl/errors.hpp"

namespace cmpl {

namespace {

// m(r) mod M, m given by its coefficient list (monic, leading 1 included).
Poly eval_minpoly(const std::vector<Poly>& m, const Poly& r, const Poly& M) {
  Poly acc(r.field());
  for (std::size_t j = m.size(); j-- > 0;) acc = (mulmod(acc, r, M) + m[j]) % M;
  return acc;
}

Poly eval_derivative(const std::vector<Poly>& m, const Poly& r, const Poly& M) {
  const FieldPtr& F = r.field();
  Poly acc(F);
  for (std::size_t j = m.size(); j-- > 1;) acc = (mulmod(acc, r, M) + m[j].scaled(F->from_int(static_cast<long long>(j)))) % M;
  return acc;
}

}  // namespace

std::vector<Poly> residue_roots(const ExtPtr& K, const PlacePtr& P) {
  const FieldPtr& F = K->base();
  const auto& m = K->minpoly();
  const long dv = P->deg();
  const std::uint64_t total = P->residue_order();
  if (total > (std::uint64_t{1} << 22)) throw DomainError("residue field too large for root enumeration");
  std::vector<Poly> roots;
  bool multiple = false;
  std::vector<Fq> c(static_cast<std::size_t>(dv));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t x = code;
    for (long i = 0; i < dv; ++i) {
      c[static_cast<std::size_t>(i)] = static_cast<Fq>(x % F->q());
      x /= F->q();
    }
    const Poly r(F, c);
    if (!eval_minpoly(m, r, P->v()).is_zero()) continue;
    if (eval_derivative(m, r, P->v()).is_zero()) {
      multiple = true;
      continue;
    }
    roots.push_back(r);
  }
  if (roots.empty())
    throw DomainError(multiple ? "minimal polynomial has only multiple roots mod v (ramified)"
                               : "minimal polynomial has no root mod v: K does not embed in k_v");
  return roots;
}

Poly hensel_lift(const std::vector<Poly>& m, const PlacePtr& P, const Poly& r0, long n) {
  Poly r = r0;
  long k = 1;
  while (k < n) {
    k = std::min(2 * k, n);
    const Poly M = P->power(k);
    const Poly f = eval_minpoly(m, r, M);
    const Poly d = eval_derivative(m, r, M);
    r = (r - mulmod(f, modinv(d, M), M)) % M;
  }
  return P->reduce(r, n);
}

EmbeddingPtr VAdicEmbedding::make(const ExtPtr& K, const PlacePtr& P, std::size_t root_index) {
  if (!same_field(K->base(), P->field())) throw DomainError("field mismatch between K and v");
  auto e = std::shared_ptr<VAdicEmbedding>(new VAdicEmbedding());
  e->K_ = K;
  e->P_ = P;
  if (K->is_trivial()) {
    e->r0_ = Poly(K->base());
    e->count_ = 1;
  } else {
    const auto roots = residue_roots(K, P);
    if (root_index >= roots.size())
      throw DomainError("root index " + std::to_string(root_index) + " out of range; " +
                        std::to_string(roots.size()) + " simple roots mod v");
    e->r0_ = roots[root_index];
    e->count_ = roots.size();
  }
  e->index_ = root_index;
  e->lifted_ = e->r0_;
  e->lifted_prec_ = 1;
  return e;
}

Poly VAdicEmbedding::root(long n) const {
  if (K_->is_trivial()) return Poly(K_->base());
  std::lock_guard<std::mutex> lock(mu_);
  if (n > lifted_prec_) {
    lifted_ = hensel_lift(K_->minpoly(), P_, lifted_, n);
    lifted_prec_ = n;
  }
  return P_->reduce(lifted_, n);
}

VAdicNumber VAdicEmbedding::embed(const AxElem& a, long rel_prec) const {
  if (a.is_zero()) return VAdicNumber::exact_zero(P_);
  if (a.is_scalar()) return embed(a.coord(0), rel_prec);
  long A = rel_prec + 1;
  for (;;) {
    const Poly M = P_->power(A);
    const Poly r = root(A);
    Poly acc(K_->base());
    const auto& c = a.coords();
    for (std::size_t j = c.size(); j-- > 0;) acc = (mulmod(acc, r, M) + P_->reduce(c[j], A)) % M;
    if (!acc.is_zero()) {
      const long k = P_->ord(acc, A);
      if (A - k >= rel_prec) return VAdicNumber::from_parts(P_, 0, acc, A).with_rel_prec(rel_prec);
      A = k + rel_prec;
    } else {
      A *= 2;
    }
  }
}

VAdicNumber VAdicEmbedding::embed(const ExtElem& a, long rel_prec) const {
  if (a.is_zero()) return VAdicNumber::exact_zero(P_);
  const VAdicNumber n = embed(a.num(), rel_prec);
  if (a.den().is_one()) return n;
  return n / embed(a.den(), rel_prec);
}

VAdicNumber VAdicEmbedding::embed(const Frac& a, long rel_prec) const {
  if (a.is_zero()) return VAdicNumber::exact_zero(P_);
  VAdicNumber x = embed(a.num(), rel_prec);
  for (const auto& [key, e] : a.den()) x = x / embed(key, rel_prec).pow(static_cast<std::uint64_t>(e));
  return x;
}

}  // namespace cmpl
