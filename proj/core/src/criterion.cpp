#include "cmpl/criterion.hpp"

#include <numeric>

#include "cmpl/errors.hpp"
#include "cmpl/period.hpp"
#include "cmpl/reconstruct.hpp"

namespace cmpl {

namespace {

// All polynomial coefficients of the coordinates of n * w, as one F_q vector.
std::vector<Fq> flatten(const ExtVector& w, const Poly& den, std::size_t deg_len) {
  std::vector<Fq> out;
  for (const auto& c : w) {
    const AxElem scaled = c.num().mul_poly(den / c.den());
    for (const auto& p : scaled.coords())
      for (std::size_t k = 0; k < deg_len; ++k) out.push_back(p.coeff(k));
  }
  return out;
}

}  // namespace

TorsionResult torsion_search(const TModule& G, const ExtVector& w, long D) {
  if (D < 1) throw DomainError("torsion search needs a degree bound >= 1");
  const FieldPtr& F = G.field();
  const FqField& f = *F;
  TorsionResult res;
  res.degree_bound = D;
  std::vector<ExtVector> it{w};
  for (long j = 1; j <= D; ++j) it.push_back(G.apply_t(it.back()));

  Poly den = Poly::one(F);
  for (const auto& v : it)
    for (const auto& c : v) den = den * (c.den() / gcd(den, c.den()));
  long top = 0;
  for (const auto& v : it)
    for (const auto& c : v) top = std::max(top, c.num().mul_poly(den / c.den()).max_deg());
  const std::size_t len = static_cast<std::size_t>(top + 1);

  struct Row {
    std::vector<Fq> vec, comb;
    std::size_t pivot;
  };
  std::vector<Row> basis;
  const std::size_t n = it.size();
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Fq> cur = flatten(it[j], den, len);
    std::vector<Fq> comb(n, 0);
    comb[j] = 1;
    for (const auto& row : basis) {
      const Fq x = cur[row.pivot];
      if (x == 0) continue;
      const Fq fac = f.mul(x, f.inv(row.vec[row.pivot]));
      for (std::size_t k = 0; k < cur.size(); ++k) cur[k] = f.sub(cur[k], f.mul(fac, row.vec[k]));
      for (std::size_t k = 0; k < n; ++k) comb[k] = f.sub(comb[k], f.mul(fac, row.comb[k]));
    }
    const auto nz = std::find_if(cur.begin(), cur.end(), [](Fq x) { return x != 0; });
    if (nz == cur.end()) {
      comb.resize(j + 1);
      Poly a(F, comb);
      bool zero = true;
      for (const auto& c : G.apply(a, w)) zero = zero && c.is_zero();
      if (!zero) throw DomainError("torsion certificate failed exact verification");
      res.found = true;
      res.a = std::move(a);
      return res;
    }
    const auto pivot = static_cast<std::size_t>(nz - cur.begin());
    basis.push_back({std::move(cur), std::move(comb), pivot});
  }
  return res;
}

VanishingReport simultaneous_vanishing(const Composition& s, const std::vector<ExtElem>& u, const EmbeddingPtr& emb,
                                       const PrecisionBudget& budget) {
  const std::size_t r = s.depth();
  const ExtendedTables t = extended_tables(s, u, emb, budget);
  VanishingReport rep;
  rep.precision = budget.target;
  rep.li_vanish = rep.star_vanish = true;
  for (std::size_t l = 0; l < r; ++l) {
    rep.li.push_back(t.nonstar[l][r - 1]);
    rep.star.push_back(t.star[l][r - 1]);
    rep.li_vanish = rep.li_vanish && rep.li.back().is_zero();
    rep.star_vanish = rep.star_vanish && rep.star.back().is_zero();
  }
  rep.consistent = rep.li_vanish == rep.star_vanish;
  return rep;
}

HarnessReport theorem_harness(const Composition& s, const std::vector<ExtElem>& u, const EmbeddingPtr& emb,
                              const PrecisionBudget& budget, long D) {
  HarnessReport rep;
  rep.vanishing = simultaneous_vanishing(s, u, emb, budget);
  TModule G(s, u);
  rep.torsion = torsion_search(G, G.special_point(), D);
  const bool vanish = rep.vanishing.li_vanish && rep.vanishing.star_vanish;
  const bool none = !rep.vanishing.li_vanish && !rep.vanishing.star_vanish;
  rep.consistent = rep.torsion.found ? vanish : none;
  return rep;
}

EulerianReport eulerian_ratio(const FieldPtr& F, const std::function<InfLaurent(long)>& value, long weight, long H,
                              long min_coeffs, long exponent) {
  const long q = F->q();
  EulerianReport rep;
  const long e0 = (q - 1) / std::gcd(weight, q - 1);
  if (exponent < 0 || exponent % e0 != 0) throw DomainError("exponent must be a multiple of " + std::to_string(e0));
  rep.exponent = exponent == 0 ? e0 : exponent;
  rep.period_power = weight * rep.exponent / (q - 1);
  const long need = std::max(min_coeffs, 2 * H + 2);
  long P = -need;
  for (;;) {
    if (-P > (1L << 14)) throw PrecisionError("value indistinguishable from 0 at every tried precision");
    const InfLaurent x = value(P);
    if (x.is_exact_zero()) {
      rep.eulerian = true;
      rep.witness = RatFunc(F);
      rep.ratio = x;
      return rep;
    }
    if (x.is_zero()) {
      P -= need;
      continue;
    }
    const long have = x.count();
    if (have < need) {
      P -= need - have;
      continue;
    }
    const InfLaurent xe = x.pow(static_cast<std::uint64_t>(rep.exponent));
    const InfLaurent pi = carlitz_period_power(F, q - xe.count() + 1);
    rep.ratio = xe / pi.pow(static_cast<std::uint64_t>(rep.period_power));
    rep.coefficients = rep.ratio.count();
    if (rep.coefficients < need) {
      P -= need - rep.coefficients;
      continue;
    }
    rep.witness = rational_reconstruct(rep.ratio, H);
    rep.eulerian = rep.witness.has_value();
    return rep;
  }
}

EulerianReport eulerian_check_inf(const Composition& s, const std::vector<RatFunc>& u, long H, long min_coeffs) {
  if (u.empty()) throw DomainError("empty argument list");
  const FieldPtr& F = u[0].field();
  auto value = [&](long P) {
    PrecisionBudget b;
    b.target = P;
    return cmpl_eval_inf(s, u, b);
  };
  return eulerian_ratio(F, value, s.weight(), H, min_coeffs, static_cast<long>(F->q()) - 1);
}

ZetaPartial carlitz_zeta_partial(const FieldPtr& F, long n, long B) {
  if (n < 1) throw DomainError("zeta needs n >= 1");
  if (B < 0) throw DomainError("degree bound must be >= 0");
  const std::uint64_t q = F->q();
  RatFunc total(F);
  for (long d = 0; d <= B; ++d) {
    // sum over monic a of degree d, as a single fraction
    std::uint64_t count = 1;
    for (long k = 0; k < d; ++k) count *= q;
    RatFunc part(F);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<Fq> c(static_cast<std::size_t>(d) + 1, 0);
      std::uint64_t x = code;
      for (long k = 0; k < d; ++k) {
        c[static_cast<std::size_t>(k)] = static_cast<Fq>(x % q);
        x /= q;
      }
      c.back() = 1;
      part += RatFunc(Poly::one(F), Poly(F, c).pow(static_cast<std::uint64_t>(n)));
    }
    total += part;
  }
  return {total, -n * (B + 1)};
}

InfLaurent carlitz_zeta_inf(const FieldPtr& F, long n, long prec) {
  if (n < 1 || n > static_cast<long>(F->q())) throw DomainError("power-sum zeta needs 1 <= n <= q");
  PrecisionBudget b;
  b.target = prec;
  return cmpl_eval_inf(Composition({static_cast<int>(n)}), {RatFunc::constant(F, 1)}, b);
}

EulerianReport zeta_eulerian_check(const FieldPtr& F, long n, long H, long min_coeffs) {
  return eulerian_ratio(F, [&](long P) { return carlitz_zeta_inf(F, n, P); }, n, H, min_coeffs);
}

}  // namespace cmpl
