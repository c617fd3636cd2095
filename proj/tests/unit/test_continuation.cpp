#include <random>

#include "cmpl/continuation.hpp"
#include "cmpl/errors.hpp"
#include "doctest.h"

using namespace cmpl;

namespace {

ExtElem P(const ExtPtr& K, std::vector<Fq> c) { return ExtElem::from_poly(K, Poly(K->base(), std::move(c))); }

std::vector<ExtElem> reversed(std::vector<ExtElem> u) { return {u.rbegin(), u.rend()}; }

PrecisionBudget target(long A) {
  PrecisionBudget b;
  b.target = A;
  return b;
}

}  // namespace

TEST_CASE("log_eval_v on the Carlitz module") {
  auto F = FqField::of_order(3);
  auto K = ExtField::trivial(F);
  for (const auto& vp : {Poly(F, {0, 1}), Poly(F, {1, 1})}) {
    auto emb = VAdicEmbedding::make(K, VPlace::make(vp));
    TModule C(Composition({1}), {P(K, {1})});
    const ExtElem x = ExtElem::from_poly(K, vp * Poly(F, {2, 1, 1}));
    const auto got = log_eval_v(C, {x}, emb, target(20));
    CHECK(agrees(got[0], cmpl_eval_v(Composition({1}), {x}, emb, target(20))));
    CHECK(got[0].abs_prec() == 20);
    CHECK(log_eval_v(C, {ExtElem(K)}, emb, target(20))[0].is_exact_zero());
    CHECK_THROWS_AS(log_eval_v(C, {P(K, {1, 1, 1})}, emb, target(5)), DomainError);
  }
}

TEST_CASE("log of the special point gives star values") {
  auto F = FqField::of_order(3);
  auto K = ExtField::trivial(F);
  auto emb = VAdicEmbedding::make(K, VPlace::make(Poly(F, {0, 1})));
  const ExtElem th = P(K, {0, 1});
  TModule G(Composition({1, 1}), {th, th});
  const auto lg = log_eval_v(G, G.special_point(), emb, target(20));
  CHECK(agrees(lg[1], -cmpl_eval_v(Composition({1, 1}), {th, th}, emb, target(20), true)));
  CHECK(agrees(lg[2], cmpl_eval_v(Composition({1}), {th}, emb, target(20), true)));

  TModule H(Composition({2, 1}), {P(K, {1, 1}), th});
  const auto lh = log_eval_v(H, H.special_point(), emb, target(20));
  CHECK(agrees(lh[2], -cmpl_eval_v(Composition({1, 2}), {th, P(K, {1, 1})}, emb, target(20), true)));
  CHECK(agrees(lh[3], cmpl_eval_v(Composition({1}), {th}, emb, target(20), true)));
}

TEST_CASE("continuation multiplier") {
  auto F = FqField::of_order(3);
  auto K = ExtField::trivial(F);
  auto emb = VAdicEmbedding::make(K, VPlace::make(Poly(F, {0, 1})));
  TModule G(Composition({1, 1}), {P(K, {1, 1}), P(K, {2, 1})});
  const Continuation c = continuation_multiplier(G, emb);
  CHECK(c.ell == 1);
  const Poly t(F, {0, 1});
  const Poly one = Poly::one(F);
  CHECK(c.a == (t * t - one) * (t - one));
  for (const auto& y : c.moved)
    if (!y.is_zero()) CHECK(emb->embed(y, 1).val() >= 1);

  // residues outside F_3 need ell = 2
  auto emb2 = VAdicEmbedding::make(K, VPlace::make(Poly(F, {1, 0, 1})));
  TModule G2(Composition({1}), {P(K, {0, 1})});
  CHECK(residue_degree(G2.u(), emb2) == 2);
  CHECK(continuation_multiplier(G2, emb2).a.deg() == 4);

  // |u|_v > 1 never reaches the disc
  TModule bad(Composition({1}), {ExtElem::from_ratfunc(K, RatFunc(one, t))});
  CHECK_THROWS_AS(continuation_multiplier(bad, emb), DomainError);
}

TEST_CASE("torsion point lambda") {
  auto F = FqField::of_order(3);
  auto K = ExtField::make(F, {Poly(F, {0, 1}), Poly(F), Poly::one(F)});
  auto emb = VAdicEmbedding::make(K, VPlace::make(Poly(F, {1, 1})));
  const ExtElem lambda = ExtElem::generator(K);
  CHECK(emb->embed(lambda, 2).unit() == Poly(F, {2, 1}));
  TModule C(Composition({1}), {lambda});
  const Continuation c = continuation_multiplier(C, emb);
  CHECK(c.a == Poly(F, {0, 1}));
  CHECK(c.moved_is_zero);
  CHECK(extended_cmspl(Composition({1}), {lambda}, emb, target(12))[0].is_exact_zero());
}

TEST_CASE("extended values agree with the series on the open disc") {
  auto F = FqField::of_order(3);
  auto K = ExtField::trivial(F);
  for (const auto& vp : {Poly(F, {0, 1}), Poly(F, {1, 1})}) {
    auto emb = VAdicEmbedding::make(K, VPlace::make(vp));
    const ExtElem u1 = ExtElem::from_poly(K, vp), u2 = ExtElem::from_poly(K, vp * Poly(F, {1, 1}));
    const auto star = extended_cmspl(Composition({1, 2}), {u1, u2}, emb, target(20));
    CHECK(agrees(star[1], cmpl_eval_v(Composition({2}), {u2}, emb, target(20), true)));
    CHECK(agrees(star[0], cmpl_eval_v(Composition({2, 1}), {u2, u1}, emb, target(20), true)));
    const VAdicNumber li = extended_cmpl(Composition({1, 2}), {u1, u2}, emb, target(20));
    CHECK(agrees(li, cmpl_eval_v(Composition({1, 2}), {u1, u2}, emb, target(20))));
    CHECK(li.abs_prec() == 20);
  }
}

TEST_CASE("extended values do not depend on the multiplier") {
  auto F = FqField::of_order(3);
  auto K = ExtField::trivial(F);
  auto emb = VAdicEmbedding::make(K, VPlace::make(Poly(F, {1, 1})));
  const std::vector<ExtElem> u{P(K, {0, 1}), P(K, {2, 1, 1})};
  const Composition s({1, 1});
  const Poly e1(F, {1, 1}), e2(F, {1, 0, 1});
  const auto base = extended_cmspl(s, u, emb, target(20));
  const auto x1 = extended_cmspl(s, u, emb, target(20), &e1);
  const auto x2 = extended_cmspl(s, u, emb, target(20), &e2);
  for (std::size_t l = 0; l < 2; ++l) {
    CHECK(agrees(base[l], x1[l]));
    CHECK(agrees(base[l], x2[l]));
    CHECK(x1[l].abs_prec() == 20);
  }
}

TEST_CASE("log commutes with rho_a") {
  auto F = FqField::of_order(3);
  auto K = ExtField::trivial(F);
  auto emb = VAdicEmbedding::make(K, VPlace::make(Poly(F, {0, 1})));
  TModule G(Composition({1, 2}), {P(K, {1, 1}), P(K, {0, 1})});
  ExtVector x;
  for (std::size_t i = 0; i < G.dim(); ++i) x.push_back(P(K, {0, static_cast<Fq>(i % 3), 1}));
  for (const auto& a : {Poly(F, {0, 1}), Poly(F, {1, 1}), Poly(F, {2, 0, 1}), Poly(F, {2})})
    for (const auto& y : log_commute_check(G, x, a, emb, target(20))) {
      CHECK(y.is_zero());
      CHECK(y.abs_prec() >= 20);
    }
}
