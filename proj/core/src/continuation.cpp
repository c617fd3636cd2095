#include "cmpl/continuation.hpp"

#include "cmpl/errors.hpp"

namespace cmpl {

namespace {

long min_ord(const ExtVector& x, const EmbeddingPtr& emb) {
  long m = VAdicNumber::kInf;
  for (const auto& c : x)
    if (!c.is_zero()) m = std::min(m, emb->embed(c, 1).val());
  return m;
}

Poly v_of_t_power_minus_one(const Poly& v, long n) {
  Poly p = Poly::one(v.field());
  for (long k = 0; k < n; ++k) p = p * v;
  return p - Poly::one(v.field());
}

}  // namespace

std::vector<VAdicNumber> log_eval_v(const TModule& G, const ExtVector& x, const EmbeddingPtr& emb,
                                    const PrecisionBudget& budget, SeriesStats* stats) {
  const std::size_t d = G.dim();
  if (x.size() != d) throw DomainError("point dimension does not match the t-module");
  const PlacePtr& P = emb->place();
  const long A = budget.target;
  const long m = min_ord(x, emb);
  if (m >= VAdicNumber::kInf) return std::vector<VAdicNumber>(d, VAdicNumber::exact_zero(P));
  if (m < 1) throw DomainError("log_G needs |x|_v < 1");
  const long slope = 2L * G.index().d(0) - 1;
  const long q = P->field()->q();
  const long I = vadic_truncation(q, 1, m, slope, A);
  const auto Ps = G.log_coeffs(static_cast<std::size_t>(I));

  long W = A + slope * I + budget.slack;
  for (;;) {
    if (W > budget.max_working) throw PrecisionError("working precision ceiling reached in log_G");
    std::vector<VAdicNumber> xv;
    for (const auto& c : x) xv.push_back(emb->embed(c, W));
    std::vector<VAdicNumber> out(d, VAdicNumber::exact_zero(P));
    for (long i = 0; i <= I; ++i) {
      if (i > 0)
        for (auto& c : xv) c = c.frobenius(1, W);
      const FracMatrix& Pi = Ps[static_cast<std::size_t>(i)];
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t c = 0; c < d; ++c) {
          if (Pi.num(a, c).is_zero() || xv[c].is_exact_zero()) continue;
          out[a] += emb->embed(Pi.entry(a, c), W) * xv[c];
        }
    }
    bool ok = true;
    for (const auto& y : out) ok = ok && y.abs_prec() >= A;
    if (ok) {
      if (stats) *stats = {I, W};
      for (auto& y : out) y = y.with_abs_prec(A);
      return out;
    }
    W *= 2;
  }
}

long residue_degree(const std::vector<ExtElem>& u, const EmbeddingPtr& emb) {
  const PlacePtr& P = emb->place();
  const Poly& v = P->v();
  std::vector<Poly> res;
  for (const auto& x : u) {
    if (x.is_zero()) continue;
    const VAdicNumber e = emb->embed(x, 1);
    if (e.val() < 0) throw DomainError("continuation needs |u_i|_v <= 1");
    if (e.val() == 0) res.push_back(P->reduce(e.unit(), 1));
  }
  const std::uint64_t q = P->field()->q();
  for (long ell = 1;; ++ell) {
    bool ok = true;
    for (auto& r : res) {
      Poly y = r;
      for (long k = 0; k < ell; ++k) y = powmod(y, q, v);
      ok = ok && y == r;
    }
    if (ok) return ell;
  }
}

Continuation continuation_multiplier(const TModule& G, const EmbeddingPtr& emb, const Poly& extra) {
  if (extra.is_zero()) throw DomainError("multiplier factor must be nonzero");
  Continuation out;
  out.ell = residue_degree(G.u(), emb);
  const Poly& v = emb->place()->v();
  out.a = extra;
  for (std::size_t l = 0; l < G.index().depth(); ++l)
    out.a = out.a * v_of_t_power_minus_one(v, G.index().d(l) * out.ell);
  out.moved = G.apply(out.a, G.special_point());
  out.moved_is_zero = true;
  for (const auto& c : out.moved) out.moved_is_zero = out.moved_is_zero && c.is_zero();
  if (!out.moved_is_zero && min_ord(out.moved, emb) < 1)
    throw DomainError("multiplier did not move the point into the open unit disc");
  return out;
}

Continuation continuation_multiplier(const TModule& G, const EmbeddingPtr& emb) {
  return continuation_multiplier(G, emb, Poly::one(G.field()));
}

std::vector<VAdicNumber> extended_cmspl(const Composition& s, const std::vector<ExtElem>& u, const EmbeddingPtr& emb,
                                        const PrecisionBudget& budget, const Poly* extra) {
  const std::size_t r = s.depth();
  const PlacePtr& P = emb->place();
  for (const auto& x : u)
    if (x.is_zero()) return std::vector<VAdicNumber>(r, VAdicNumber::exact_zero(P));
  TModule G(s, u);
  const Continuation c = extra ? continuation_multiplier(G, emb, *extra) : continuation_multiplier(G, emb);
  if (c.moved_is_zero) return std::vector<VAdicNumber>(r, VAdicNumber::exact_zero(P));
  // a(theta): the same coefficients read in theta
  const Poly& a_theta = c.a;
  const long loss = P->ord(a_theta, VAdicNumber::kInf);
  PrecisionBudget b = budget;
  b.target += loss;
  const auto logv = log_eval_v(G, c.moved, emb, b);
  const VAdicNumber av = emb->embed(a_theta, b.target + budget.slack);
  std::vector<VAdicNumber> out;
  for (std::size_t l = 0; l < r; ++l) {
    VAdicNumber y = logv[static_cast<std::size_t>(s.bottom(l))] / av;
    if ((r - 1 - l) % 2) y = -y;
    out.push_back(y.with_abs_prec(budget.target));
  }
  return out;
}

ExtendedTables extended_tables(const Composition& s, const std::vector<ExtElem>& u, const EmbeddingPtr& emb,
                               const PrecisionBudget& budget, const Poly* extra) {
  const std::size_t r = s.depth();
  if (u.size() != r) throw DomainError("argument count does not match depth");
  const PlacePtr& P = emb->place();
  PrecisionBudget b = budget;
  for (;;) {
    ExtendedTables t;
    t.star.assign(r, std::vector<VAdicNumber>(r, VAdicNumber::exact_zero(P)));
    t.nonstar = t.star;
    for (std::size_t hi = 0; hi < r; ++hi) {
      const auto vals = extended_cmspl(s.slice(0, hi), std::vector<ExtElem>(u.begin(), u.begin() + static_cast<long>(hi) + 1),
                                       emb, b, extra);
      for (std::size_t lo = 0; lo <= hi; ++lo) t.star[lo][hi] = vals[lo];
    }
    // Li_(s_a..s_b) from 0 = Li*_(s_b..s_a) + sum_{l=2}^{n} (-1)^(l-1) Li_(s_a..s_(a+l-2)) Li*_(s_b..s_(a+l-1))
    //                         + (-1)^n ... solved for the last term
    long worst = VAdicNumber::kInf;
    for (std::size_t len = 1; len <= r; ++len)
      for (std::size_t lo = 0; lo + len <= r; ++lo) {
        const std::size_t hi = lo + len - 1;
        VAdicNumber S = t.star[lo][hi];
        for (std::size_t l = 2; l <= len; ++l) {
          const VAdicNumber term = t.nonstar[lo][lo + l - 2] * t.star[lo + l - 1][hi];
          S = (l % 2 == 0) ? S - term : S + term;
        }
        t.nonstar[lo][hi] = (len % 2 == 1) ? S : -S;
        worst = std::min(worst, t.nonstar[lo][hi].abs_prec());
      }
    if (worst >= budget.target) {
      for (auto* tab : {&t.star, &t.nonstar})
        for (auto& row : *tab)
          for (auto& y : row) y = y.with_abs_prec(budget.target);
      return t;
    }
    b.target += budget.target - worst;
  }
}

VAdicNumber extended_cmpl(const Composition& s, const std::vector<ExtElem>& u, const EmbeddingPtr& emb,
                          const PrecisionBudget& budget, const Poly* extra) {
  const auto t = extended_tables(s, u, emb, budget, extra);
  return t.nonstar[0][s.depth() - 1];
}

std::vector<VAdicNumber> log_commute_check(const TModule& G, const ExtVector& x, const Poly& a,
                                           const EmbeddingPtr& emb, const PrecisionBudget& budget) {
  const std::size_t d = G.dim();
  const auto lhs = log_eval_v(G, G.apply(a, x), emb, budget);
  const auto lx = log_eval_v(G, x, emb, budget);
  const ExtMatrix D = G.d_rho(a);
  std::vector<VAdicNumber> out;
  for (std::size_t i = 0; i < d; ++i) {
    VAdicNumber y = lhs[i];
    for (std::size_t j = 0; j < d; ++j)
      if (!D(i, j).is_zero()) y -= emb->embed(D(i, j), budget.target + budget.slack) * lx[j];
    out.push_back(y.with_abs_prec(budget.target));
  }
  return out;
}

}  // namespace cmpl
