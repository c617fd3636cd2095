#pragma once

#include <vector>

#include "cmpl/embedding.hpp"
#include "cmpl/polylog.hpp"
#include "cmpl/tmodule.hpp"

namespace cmpl {

/// log_G(x) in k_v^d for an exact point x with |x|_v < 1. The series is cut
/// where the tail bound q^i ord_v(x) - (2 d_1 - 1) i reaches the target.
std::vector<VAdicNumber> log_eval_v(const TModule& G, const ExtVector& x, const EmbeddingPtr& emb,
                                    const PrecisionBudget& budget, SeriesStats* stats = nullptr);

struct Continuation {
  long ell = 1;         ///< residues of the u_i lie in F_(q^ell)
  Poly a;               ///< the multiplier in F_q[t] (printed in t)
  ExtVector moved;      ///< rho_a(special point), inside the open unit disc
  bool moved_is_zero = false;
};

/// Smallest ell >= 1 with every residue of u_i mod m_v in F_(q^ell).
long residue_degree(const std::vector<ExtElem>& u, const EmbeddingPtr& emb);

/// a = prod_l (v(t)^(d_l ell) - 1) times `extra`, and rho_a applied to the
/// special point. Requires |u_i|_v <= 1.
Continuation continuation_multiplier(const TModule& G, const EmbeddingPtr& emb, const Poly& extra);
Continuation continuation_multiplier(const TModule& G, const EmbeddingPtr& emb);

/// Extended Li*_(s_r..s_l)(u_r..u_l)_v for l = 1..r (index l-1), all read off
/// one log evaluation at the moved point.
std::vector<VAdicNumber> extended_cmspl(const Composition& s, const std::vector<ExtElem>& u, const EmbeddingPtr& emb,
                                        const PrecisionBudget& budget, const Poly* extra = nullptr);

/// Interval values on the closed unit polydisc: star[a][b] = Li*_(s_b..s_a)(u_b..u_a)
/// and nonstar[a][b] = Li_(s_a..s_b)(u_a..u_b) for a <= b (0-based).
struct ExtendedTables {
  std::vector<std::vector<VAdicNumber>> star, nonstar;
};
ExtendedTables extended_tables(const Composition& s, const std::vector<ExtElem>& u, const EmbeddingPtr& emb,
                               const PrecisionBudget& budget, const Poly* extra = nullptr);

/// Extended Li_(s_1..s_r)(u_1..u_r)_v.
VAdicNumber extended_cmpl(const Composition& s, const std::vector<ExtElem>& u, const EmbeddingPtr& emb,
                          const PrecisionBudget& budget, const Poly* extra = nullptr);

/// log_G(rho_a(x)) - d rho_a(log_G(x)).
std::vector<VAdicNumber> log_commute_check(const TModule& G, const ExtVector& x, const Poly& a,
                                           const EmbeddingPtr& emb, const PrecisionBudget& budget);

}  // namespace cmpl
