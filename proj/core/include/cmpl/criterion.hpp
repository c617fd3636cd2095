#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cmpl/continuation.hpp"
#include "cmpl/inf_laurent.hpp"

namespace cmpl {

struct TorsionResult {
  bool found = false;
  Poly a;              ///< monic annihilator of least degree, verified exactly
  long degree_bound = 0;
};

/// Looks for an F_q-linear relation among w, rho_t(w), ..., rho_t^D(w).
/// "Not found" means inconclusive, never "not torsion".
TorsionResult torsion_search(const TModule& G, const ExtVector& w, long D);

struct VanishingReport {
  /// li[l] = Li_(s_l..s_r)(u_l..u_r)_v, star[l] = Li*_(s_r..s_l)(u_r..u_l)_v.
  std::vector<VAdicNumber> li, star;
  bool li_vanish = false;    ///< (i): every li[l] is zero to precision
  bool star_vanish = false;  ///< (ii)
  bool consistent = false;   ///< (i) and (ii) agree
  long precision = 0;
};

VanishingReport simultaneous_vanishing(const Composition& s, const std::vector<ExtElem>& u, const EmbeddingPtr& emb,
                                       const PrecisionBudget& budget);

struct HarnessReport {
  VanishingReport vanishing;
  TorsionResult torsion;
  bool consistent = false;
  std::string flag() const { return consistent ? "CONSISTENT" : "TENSION"; }
};

/// Runs both vanishing families and the torsion search on the special point.
HarnessReport theorem_harness(const Composition& s, const std::vector<ExtElem>& u, const EmbeddingPtr& emb,
                              const PrecisionBudget& budget, long D);

struct EulerianReport {
  bool eulerian = false;
  std::optional<RatFunc> witness;  ///< value^e / (pi~^(q-1))^k when it reconstructs
  long exponent = 1;               ///< e, a multiple of (q-1) / gcd(weight, q-1)
  long period_power = 1;           ///< k = weight e / (q-1)
  long coefficients = 0;           ///< coefficients handed to the reconstruction
  InfLaurent ratio;
};

/// Reconstructs value^e / (pi~^(q-1))^k at height H from at least
/// max(min_coeffs, 2H+2) coefficients. `value(P)` must return the value with
/// every coefficient of theta^e, e >= P, correct. exponent = 0 picks the
/// smallest e for which k is an integer.
EulerianReport eulerian_ratio(const FieldPtr& F, const std::function<InfLaurent(long)>& value, long weight, long H,
                              long min_coeffs = 0, long exponent = 0);

/// Eulerian test for Li_s(u) at infinity, on Li^(q-1) / (pi~^(q-1))^wt.
EulerianReport eulerian_check_inf(const Composition& s, const std::vector<RatFunc>& u, long H, long min_coeffs = 0);

struct ZetaPartial {
  RatFunc value;     ///< sum of a^(-n) over monic a with deg a <= B
  long tail_degree;  ///< omitted terms have degree <= -n (B+1)
};

ZetaPartial carlitz_zeta_partial(const FieldPtr& F, long n, long B);

/// zeta_A(n) in k_inf for 1 <= n <= q, from the power sums
/// sum_{deg a = d} a^(-n) = 1/L_d^n.
InfLaurent carlitz_zeta_inf(const FieldPtr& F, long n, long prec);

/// Eulerian test for zeta_A(n) with the smallest exponent.
EulerianReport zeta_eulerian_check(const FieldPtr& F, long n, long H, long min_coeffs = 0);

}  // namespace cmpl
