#pragma once

#include <vector>

#include "cmpl/composition.hpp"
#include "cmpl/embedding.hpp"
#include "cmpl/inf_laurent.hpp"
#include "cmpl/precision.hpp"

namespace cmpl {

/// Bookkeeping of one series evaluation.
struct SeriesStats {
  long terms = 0;    ///< largest outer index i_1 summed
  long working = 0;  ///< working relative precision that met the target
};

/// Li_s(u) (star = false, i_1 > ... > i_r) or Li*_s(u) (star = true,
/// i_1 >= ... >= i_r) in k_v, summed over i_1 <= I with I taken from the
/// valuation bound q^i ord_v(u_1) - wt(s) floor(i / deg v) on the tail.
/// The result is correct modulo v^budget.target.
/// Requires ord_v(u_1) >= 1 and ord_v(u_j) >= 0.
VAdicNumber cmpl_eval_v(const Composition& s, const std::vector<ExtElem>& u, const EmbeddingPtr& emb,
                        const PrecisionBudget& budget, bool star = false, SeriesStats* stats = nullptr);

/// The same series in k_inf; every coefficient of theta^e with e >= budget.target
/// is correct. Requires (q-1) deg u_j < s_j q for every j.
InfLaurent cmpl_eval_inf(const Composition& s, const std::vector<RatFunc>& u, const PrecisionBudget& budget,
                         bool star = false, SeriesStats* stats = nullptr);

/// Smallest I such that every omitted v-adic term (i_1 > I) has ord_v >= target.
long vadic_truncation(long q, long deg_v, long ord_u1, long weight, long target);

/// Smallest I such that every omitted term at infinity (i_1 > I) has degree < target.
long inf_truncation(long q, const std::vector<long>& deg_u, const std::vector<int>& s, long target);

/// Residue of the star/non-star identity
///   Li*_(s_r..s_1)(u_r..u_1) - sum_{l=2}^{r} (-1)^l Li_(s_1..s_(l-1))(u_1..u_(l-1)) Li*_(s_r..s_l)(u_r..u_l)
///   - (-1)^(r+1) Li_(s_1..s_r)(u_1..u_r),
/// from values supplied by the caller: nonstar[l] = Li_(s_1..s_(l+1)) and
/// star[l] = Li*_(s_r..s_(l+1)) (0-based l).
template <class V>
V star_nonstar_residue(const std::vector<V>& nonstar, const std::vector<V>& star) {
  const std::size_t r = star.size();
  V res = star[0];
  for (std::size_t l = 2; l <= r; ++l) {
    V term = nonstar[l - 2] * star[l - 1];
    res = (l % 2 == 0) ? res - term : res + term;
  }
  return (r % 2 == 1) ? res - nonstar[r - 1] : res + nonstar[r - 1];
}

/// Evaluate both families of the identity and return its residue in k_v.
VAdicNumber star_nonstar_residue_v(const Composition& s, const std::vector<ExtElem>& u, const EmbeddingPtr& emb,
                                   const PrecisionBudget& budget);
InfLaurent star_nonstar_residue_inf(const Composition& s, const std::vector<RatFunc>& u,
                                    const PrecisionBudget& budget);

}  // namespace cmpl
