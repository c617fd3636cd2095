#include <random>

#include "cmpl/embedding.hpp"
#include "cmpl/errors.hpp"
#include "cmpl/period.hpp"
#include "cmpl/reconstruct.hpp"
#include "doctest.h"

using namespace cmpl;

namespace {

Poly P(const FieldPtr& F, std::vector<Fq> c) { return Poly(F, std::move(c)); }

Poly random_poly(const FieldPtr& F, std::mt19937_64& rng, int maxdeg) {
  std::vector<Fq> c(static_cast<std::size_t>(rng() % (maxdeg + 1) + 1));
  for (auto& x : c) x = static_cast<Fq>(rng() % F->q());
  return Poly(F, c);
}

RatFunc random_ratfunc(const FieldPtr& F, std::mt19937_64& rng, int maxdeg) {
  Poly d;
  do d = random_poly(F, rng, maxdeg);
  while (d.is_zero());
  return RatFunc(random_poly(F, rng, maxdeg), d);
}

}  // namespace

TEST_CASE("embedding into k_inf") {
  auto F = FqField::of_order(3);
  auto x = InfLaurent::embed(RatFunc(Poly::theta(F)), 0);
  CHECK(x.is_exact());
  CHECK(x.val() == 1);
  CHECK(x.coeff(1) == 1);
  auto y = InfLaurent::embed(RatFunc(Poly::one(F), P(F, {2, 1})), -4);
  CHECK(y.val() == -1);
  for (long e = -1; e >= -4; --e) CHECK(y.coeff(e) == 1);
  CHECK_THROWS_AS(y.coeff(-5), PrecisionError);
  CHECK(InfLaurent::embed(RatFunc(F), 10).is_exact_zero());
}

TEST_CASE("k_inf embedding is a ring homomorphism") {
  auto F = FqField::of_order(3);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    RatFunc a = random_ratfunc(F, rng, 5), b = random_ratfunc(F, rng, 5);
    const long prec = -20;
    auto ea = InfLaurent::embed(a, prec), eb = InfLaurent::embed(b, prec);
    CHECK(agrees(ea * eb, InfLaurent::embed(a * b, prec - 10)));
    CHECK(agrees(ea + eb, InfLaurent::embed(a + b, prec - 10)));
    CHECK(agrees(ea.frobenius(), InfLaurent::embed(a.frobenius(), prec * 3 - 10)));
    if (!b.is_zero()) CHECK(agrees(ea.truncate(prec) / eb.truncate(prec), InfLaurent::embed(a / b, prec - 30)));
  }
}

TEST_CASE("v-adic embedding and arithmetic") {
  auto F = FqField::of_order(3);
  auto vt = VPlace::make(Poly::theta(F));
  auto x = VAdicNumber::from_ratfunc(vt, RatFunc(Poly::monomial(F, 1, 2)), 4);
  CHECK(x.val() == 2);
  CHECK(x.unit().is_one());
  auto y = VAdicNumber::from_ratfunc(vt, RatFunc(Poly::one(F), P(F, {1, 1})), 3);
  CHECK(y.val() == 0);
  CHECK(y.unit() == P(F, {1, 2, 1}));
  auto v1 = VPlace::make(P(F, {1, 1}));
  auto z = VAdicNumber::from_ratfunc(v1, RatFunc(P(F, {0, 2})), 5);
  CHECK(z.val() == 0);
  CHECK(z.mod_power(5) == v1->reduce(P(F, {0, 2}), 5));
  auto a = VAdicNumber::from_poly(vt, P(F, {1, 1}), 3), b = VAdicNumber::from_poly(vt, P(F, {1, 2}), 3);
  CHECK((a * b).unit() == P(F, {1, 0, 2}));
  CHECK_THROWS_AS(VPlace::make(P(F, {1, 0, 1}).scaled(2)), DomainError);
  CHECK_THROWS_AS(VPlace::make(P(F, {2, 0, 1})), DomainError);
  CHECK_THROWS_AS(a / VAdicNumber::zero_to(vt, 5), PrecisionError);
}

TEST_CASE("k_v embedding is a ring homomorphism") {
  auto F = FqField::of_order(3);
  std::mt19937_64 rng(5);
  for (const auto& vp : {Poly::theta(F), P(F, {1, 1}), P(F, {1, 0, 1})}) {
    auto v = VPlace::make(vp);
    for (int it = 0; it < 200; ++it) {
      RatFunc a = random_ratfunc(F, rng, 5), b = random_ratfunc(F, rng, 5);
      const long N = 8;
      auto ea = VAdicNumber::from_ratfunc(v, a, N), eb = VAdicNumber::from_ratfunc(v, b, N);
      auto prod = ea * eb;
      CHECK(agrees(prod, VAdicNumber::from_ratfunc(v, a * b, N)));
      if (!ea.is_zero() && !eb.is_zero()) {
        CHECK(prod.val() == ea.val() + eb.val());
        auto s = ea + eb;
        CHECK((s.is_zero() || s.val() >= std::min(ea.val(), eb.val())));
        CHECK(agrees(s, VAdicNumber::from_ratfunc(v, a + b, 2 * N)));
      }
    }
  }
}

TEST_CASE("precision is never overstated under addition") {
  auto F = FqField::of_order(3);
  auto v = VPlace::make(Poly::theta(F));
  auto a = VAdicNumber::from_poly(v, P(F, {1, 1, 2}), 3);
  auto b = VAdicNumber::from_poly(v, P(F, {2, 2, 2}), 10);
  auto s = a + b;
  CHECK(s.abs_prec() == 3);
  CHECK(s.val() == 2);
  CHECK(s.prec() == 1);
}

TEST_CASE("hensel lifting") {
  auto F = FqField::of_order(3);
  auto v = VPlace::make(P(F, {1, 1}));
  auto K = ExtField::make(F, {P(F, {0, 1}), Poly(F), Poly::one(F)});
  auto emb = VAdicEmbedding::make(K, v);
  CHECK(emb->residue_root() == Poly::one(F));
  CHECK(emb->root(2) == P(F, {2, 1}));
  const Poly r = emb->root(20);
  const Poly M = v->power(20);
  CHECK(((r * r + P(F, {0, 1})) % M).is_zero());
  auto Kbad = ExtField::make(F, {P(F, {0, 2}), Poly(F), Poly::one(F)});
  CHECK_THROWS_AS(VAdicEmbedding::make(Kbad, v), DomainError);
  // embedding respects multiplication in K
  ExtElem x = ExtElem::generator(K);
  auto ex = emb->embed(x, 10);
  CHECK(agrees(ex * ex, emb->embed(x * x, 10)));
  ExtElem y = ExtElem::from_coords(K, {RatFunc(P(F, {1, 1})), RatFunc(Poly::one(F), P(F, {1, 0, 1}))});
  CHECK(agrees(emb->embed(y, 10) * ex, emb->embed(x * y, 10)));
}

TEST_CASE("rational reconstruction") {
  auto F = FqField::of_order(3);
  RatFunc r(Poly::one(F), P(F, {2, 1}));
  auto got = rational_reconstruct(InfLaurent::embed(r, -10), 1);
  REQUIRE(got.has_value());
  CHECK(*got == r);
  CHECK(*rational_reconstruct(InfLaurent::embed(RatFunc(Poly::theta(F)), 0), 1) == RatFunc(Poly::theta(F)));
  std::mt19937_64 rng(9);
  int none = 0;
  for (int it = 0; it < 50; ++it) {
    RatFunc a = random_ratfunc(F, rng, 3);
    if (a.height() <= 3) CHECK(*rational_reconstruct(InfLaurent::embed(a, a.degree() - 12), 3) == a);
    std::vector<Fq> c(30);
    for (auto& e : c) e = static_cast<Fq>(rng() % 3);
    c[0] = 1;
    if (!rational_reconstruct(InfLaurent::from_parts(F, 0, Poly(F, c), -29), 3)) ++none;
  }
  CHECK(none >= 49);
  CHECK_THROWS_AS(rational_reconstruct(InfLaurent::embed(r, -3), 3), PrecisionError);
}

TEST_CASE("carlitz period power") {
  for (unsigned q : {2u, 3u, 5u}) {
    auto F = FqField::of_order(q);
    auto pi = carlitz_period_power(F, -30);
    CHECK(pi.val() == static_cast<long>(q));
    CHECK(pi.coeff(q) == (q % 2 ? F->neg(1) : 1));
    CHECK(agrees(pi, carlitz_period_power(F, -35)));
  }
}
