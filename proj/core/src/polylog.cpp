#include "cmpl/polylog.hpp"

#include "cmpl/errors.hpp"
#include "cmpl/lsequence.hpp"

namespace cmpl {

namespace {

constexpr long kMaxTerms = 40;

long ipow(long q, long i) {
  long r = 1;
  for (long k = 0; k < i; ++k) {
    if (r > (1L << 40)) return 1L << 50;
    r *= q;
  }
  return r;
}

// Nested sum over i_1 (>|>=) ... (>|>=) i_r with i_1 <= I, given the
// per-level factors w[j][i] = u_j^(q^i) / L_i^(s_j).
template <class V>
V nested_sum(const std::vector<std::vector<V>>& w, bool star, const V& zero) {
  const std::size_t r = w.size();
  const std::size_t n = w[0].size();
  std::vector<V> T = w[r - 1];
  for (std::size_t j = r - 1; j-- > 0;) {
    std::vector<V> next(n, zero);
    V acc = zero;
    for (std::size_t i = 0; i < n; ++i) {
      if (star) acc += T[i];
      next[i] = acc.is_exact_zero() ? zero : w[j][i] * acc;
      if (!star) acc += T[i];
    }
    T = std::move(next);
  }
  V total = zero;
  for (const auto& t : T) total += t;
  return total;
}

}  // namespace

long vadic_truncation(long q, long deg_v, long ord_u1, long weight, long target) {
  if (ord_u1 < 1) throw DomainError("v-adic series needs |u_1|_v < 1");
  for (long I = 0; I <= kMaxTerms; ++I) {
    bool ok = true;
    for (long i = I + 1;; ++i) {
      const long qi = ipow(q, i);
      if (qi * ord_u1 - weight * (i / deg_v) < target) {
        ok = false;
        break;
      }
      // beyond this point the bound only grows
      if (qi * (q - 1) * ord_u1 >= weight) break;
    }
    if (ok) return I;
  }
  throw PrecisionError("v-adic target needs more than " + std::to_string(kMaxTerms) + " terms");
}

long inf_truncation(long q, const std::vector<long>& deg_u, const std::vector<int>& s, long target) {
  long rest = 0;
  for (std::size_t j = 1; j < deg_u.size(); ++j) rest += deg_u[j];
  for (long I = 0; I <= kMaxTerms; ++I) {
    const long i = I + 1;
    const long qi = ipow(q, i);
    const long g = qi * deg_u[0] - s[0] * (qi * q - q) / (q - 1);
    if (g + rest < target) return I;
  }
  throw PrecisionError("infinite-place target needs more than " + std::to_string(kMaxTerms) + " terms");
}

VAdicNumber cmpl_eval_v(const Composition& s, const std::vector<ExtElem>& u, const EmbeddingPtr& emb,
                        const PrecisionBudget& budget, bool star, SeriesStats* stats) {
  const std::size_t r = s.depth();
  if (u.size() != r) throw DomainError("argument count does not match depth");
  const PlacePtr& P = emb->place();
  const long A = budget.target;
  for (const auto& x : u)
    if (x.is_zero()) return VAdicNumber::exact_zero(P);

  // valuations from a short embedding
  std::vector<long> ord(r);
  for (std::size_t j = 0; j < r; ++j) {
    ord[j] = emb->embed(u[j], 1).val();
    if (ord[j] < 0) throw DomainError("v-adic series needs |u_j|_v <= 1");
  }
  const long q = P->field()->q();
  const long I = vadic_truncation(q, P->deg(), ord[0], s.weight(), A);

  long W = A + s.weight() * (I / P->deg()) + budget.slack;
  for (;;) {
    if (W > budget.max_working) throw PrecisionError("working precision ceiling reached in v-adic series");
    VAdicLSequence Lv(P, W);
    std::vector<std::vector<VAdicNumber>> w(r);
    for (std::size_t j = 0; j < r; ++j) {
      VAdicNumber p = emb->embed(u[j], W);
      for (long i = 0; i <= I; ++i) {
        if (i > 0) p = p.frobenius(1, W);
        w[j].push_back(p / Lv.L(static_cast<std::size_t>(i)).pow(static_cast<std::uint64_t>(s.s(j))));
      }
    }
    VAdicNumber total = nested_sum(w, star, VAdicNumber::exact_zero(P));
    if (total.abs_prec() >= A) {
      if (stats) *stats = {I, W};
      return total.with_abs_prec(A);
    }
    W *= 2;
  }
}

InfLaurent cmpl_eval_inf(const Composition& s, const std::vector<RatFunc>& u, const PrecisionBudget& budget,
                         bool star, SeriesStats* stats) {
  const std::size_t r = s.depth();
  if (u.size() != r) throw DomainError("argument count does not match depth");
  if (u.empty()) throw DomainError("empty argument list");
  const FieldPtr& F = u[0].field();
  const long q = F->q();
  for (const auto& x : u)
    if (x.is_zero()) return InfLaurent::exact_zero(F);
  std::vector<long> deg(r);
  long top = 0;
  for (std::size_t j = 0; j < r; ++j) {
    deg[j] = u[j].degree();
    if ((q - 1) * deg[j] >= static_cast<long>(s.s(j)) * q)
      throw DomainError("infinite-place series needs (q-1) deg u_j < s_j q");
    top += std::max(deg[j], 0L);
  }
  const long P = budget.target;
  const long I = inf_truncation(q, deg, s.s(), P);
  LSequence Ls(F);

  long W = std::max(1L, top - P + 1) + budget.slack;
  for (;;) {
    if (W > budget.max_working) throw PrecisionError("working precision ceiling reached at infinity");
    std::vector<std::vector<InfLaurent>> w(r);
    std::vector<InfLaurent> Linv;
    for (long i = 0; i <= I; ++i)
      Linv.push_back(InfLaurent::embed(RatFunc(Ls.L(static_cast<std::size_t>(i))), 0).inv(W));
    for (std::size_t j = 0; j < r; ++j) {
      InfLaurent p = InfLaurent::embed(u[j], deg[j] - W + 1);
      for (long i = 0; i <= I; ++i) {
        if (i > 0) p = p.frobenius(1);
        w[j].push_back(p * Linv[static_cast<std::size_t>(i)].pow(static_cast<std::uint64_t>(s.s(j))));
      }
    }
    InfLaurent total = nested_sum(w, star, InfLaurent::exact_zero(F));
    if (total.is_exact() || total.prec() <= P) {
      if (stats) *stats = {I, W};
      return total.truncate(P);
    }
    W *= 2;
  }
}

VAdicNumber star_nonstar_residue_v(const Composition& s, const std::vector<ExtElem>& u, const EmbeddingPtr& emb,
                                   const PrecisionBudget& budget) {
  const std::size_t r = s.depth();
  PrecisionBudget b = budget;
  for (;;) {
    std::vector<VAdicNumber> nonstar, star;
    for (std::size_t l = 0; l < r; ++l) {
      nonstar.push_back(cmpl_eval_v(s.slice(0, l),
                                    std::vector<ExtElem>(u.begin(), u.begin() + static_cast<long>(l) + 1), emb, b, false));
      std::vector<ExtElem> su(u.begin() + static_cast<long>(l), u.end());
      star.push_back(cmpl_eval_v(s.slice(l, r - 1).reversed(), std::vector<ExtElem>(su.rbegin(), su.rend()), emb, b,
                                 true));
    }
    const VAdicNumber res = star_nonstar_residue(nonstar, star);
    if (res.abs_prec() >= budget.target) return res.with_abs_prec(budget.target);
    // products with negative valuation lose digits; raise the inputs' target
    b.target += budget.target - res.abs_prec();
  }
}

InfLaurent star_nonstar_residue_inf(const Composition& s, const std::vector<RatFunc>& u,
                                    const PrecisionBudget& budget) {
  const std::size_t r = s.depth();
  PrecisionBudget b = budget;
  for (;;) {
    std::vector<InfLaurent> nonstar, star;
    for (std::size_t l = 0; l < r; ++l) {
      nonstar.push_back(cmpl_eval_inf(s.slice(0, l),
                                      std::vector<RatFunc>(u.begin(), u.begin() + static_cast<long>(l) + 1), b, false));
      std::vector<RatFunc> su(u.begin() + static_cast<long>(l), u.end());
      star.push_back(cmpl_eval_inf(s.slice(l, r - 1).reversed(), std::vector<RatFunc>(su.rbegin(), su.rend()), b, true));
    }
    const InfLaurent res = star_nonstar_residue(nonstar, star);
    if (res.is_exact() || res.prec() <= budget.target) return res.truncate(budget.target);
    b.target -= res.prec() - budget.target;
  }
}

}  // namespace cmpl
