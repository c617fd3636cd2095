#include "cmpl/criterion.hpp"
#include "cmpl/errors.hpp"
#include "cmpl/lsequence.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cmpl;

namespace {

PrecisionBudget target(long A) {
  PrecisionBudget b;
  b.target = A;
  return b;
}

struct LambdaCase {
  FieldPtr F = FqField::of_order(3);
  // x^2 - 2 theta = x^2 + theta over F_3
  ExtPtr K = ExtField::make(F, {Poly(F, {0, 1}), Poly(F), Poly::one(F)});
  EmbeddingPtr emb = VAdicEmbedding::make(K, VPlace::make(Poly(F, {1, 1})));
  ExtElem lambda = ExtElem::generator(K);
};

}  // namespace

TEST_CASE("torsion search") {
  LambdaCase c;
  TModule C(Composition({1}), {ExtElem::from_poly(c.K, Poly::one(c.F))});
  for (long D : {1, 2, 4}) {
    const auto r = torsion_search(C, {c.lambda}, D);
    REQUIRE(r.found);
    CHECK(r.a == Poly(c.F, {0, 1}));
  }
  const auto z = torsion_search(C, {ExtElem(c.K)}, 3);
  CHECK(z.found);
  CHECK(z.a.is_one());
  CHECK_FALSE(torsion_search(C, {ExtElem::from_poly(c.K, Poly(c.F, {0, 1}))}, 6).found);
  CHECK_THROWS_AS(torsion_search(C, {c.lambda}, 0), DomainError);

  // x^2 = -(theta + 1) is killed by t + 1
  auto K2 = ExtField::make(c.F, {Poly(c.F, {1, 1}), Poly(c.F), Poly::one(c.F)});
  TModule C2(Composition({1}), {ExtElem::from_poly(K2, Poly::one(c.F))});
  const auto r2 = torsion_search(C2, {ExtElem::generator(K2)}, 3);
  REQUIRE(r2.found);
  CHECK(r2.a == Poly(c.F, {1, 1}));
}

TEST_CASE("theorem harness") {
  LambdaCase c;
  for (long N : {3, 12, 24}) {
    const auto rep = theorem_harness(Composition({1}), {c.lambda}, c.emb, target(N), 4);
    CHECK(rep.vanishing.li_vanish);
    CHECK(rep.vanishing.star_vanish);
    CHECK(rep.vanishing.star[0].is_exact_zero());
    CHECK(rep.torsion.found);
    CHECK(rep.torsion.a == Poly(c.F, {0, 1}));
    CHECK(rep.flag() == "CONSISTENT");
  }
  auto K = ExtField::trivial(c.F);
  auto emb = VAdicEmbedding::make(K, VPlace::make(Poly(c.F, {0, 1})));
  const auto neg = theorem_harness(Composition({1}), {ExtElem::from_poly(K, Poly(c.F, {0, 1}))}, emb, target(6), 6);
  CHECK_FALSE(neg.vanishing.li_vanish);
  CHECK_FALSE(neg.vanishing.star_vanish);
  CHECK_FALSE(neg.torsion.found);
  CHECK(neg.flag() == "CONSISTENT");

  const std::vector<ExtElem> u{ExtElem::from_poly(K, Poly(c.F, {1, 1})), ExtElem::from_poly(K, Poly(c.F, {2, 0, 1})),
                               ExtElem::from_poly(K, Poly(c.F, {0, 1}))};
  const auto v3 = simultaneous_vanishing(Composition({1, 1, 1}), u, emb, target(20));
  CHECK(v3.consistent);
  CHECK(v3.li.size() == 3);
}

TEST_CASE("Carlitz zeta partial sums") {
  auto F = FqField::of_order(3);
  CHECK(carlitz_zeta_partial(F, 2, 0).value == RatFunc::constant(F, 1));
  const auto& f = golden()["zeta_partial_q3_n2_B1"];
  const auto z = carlitz_zeta_partial(F, 2, 1);
  CHECK(z.tail_degree == -4);
  const InfLaurent e = InfLaurent::embed(z.value, f["prec"].get<long>());
  const auto co = f["coeffs"].get<std::vector<Fq>>();
  for (std::size_t k = 0; k < co.size(); ++k) CHECK(e.coeff(-static_cast<long>(k)) == co[k]);

  // power sums of degree d equal 1/L_d^n for n <= q
  LSequence Ls(F);
  for (long n = 1; n <= 3; ++n)
    for (long d = 1; d <= 3; ++d) {
      const RatFunc S = carlitz_zeta_partial(F, n, d).value - carlitz_zeta_partial(F, n, d - 1).value;
      CHECK(S == RatFunc(Poly::one(F), Ls.L(static_cast<std::size_t>(d)).pow(static_cast<std::uint64_t>(n))));
    }
  const InfLaurent zi = carlitz_zeta_inf(F, 2, -30);
  for (std::size_t k = 0; k < co.size(); ++k)
    if (k < 12) CHECK(zi.coeff(-static_cast<long>(k)) == co[k]);
  CHECK_THROWS_AS(carlitz_zeta_inf(F, 4, -10), DomainError);
}

TEST_CASE("Euler-Carlitz reconstruction") {
  auto F = FqField::of_order(3);
  const auto& f2 = golden()["zeta_ratio_q3_n2"];
  const auto r2 = zeta_eulerian_check(F, 2, 4, 40);
  CHECK(r2.exponent == f2["exponent"].get<long>());
  CHECK(r2.period_power == f2["period_power"].get<long>());
  CHECK(r2.coefficients >= 40);
  REQUIRE(r2.eulerian);
  CHECK(*r2.witness == rat_of(F, f2["witness"]));

  const auto& f3 = golden()["zeta_ratio_q3_n3"];
  const auto r3 = zeta_eulerian_check(F, 3, 4, 40);
  CHECK(r3.exponent == f3["exponent"].get<long>());
  CHECK(r3.period_power == f3["period_power"].get<long>());
  CHECK(r3.eulerian == f3["reconstructs"].get<bool>());

  // Li_2(c) for c in F_3^x has the same ratio
  const auto a = eulerian_check_inf(Composition({2}), {RatFunc::constant(F, 1)}, 8, 40);
  const auto b = eulerian_check_inf(Composition({2}), {RatFunc::constant(F, 2)}, 8, 40);
  CHECK(a.exponent == 2);
  CHECK(*a.witness == rat_of(F, f2["witness"]).pow(2));
  REQUIRE(a.eulerian);
  REQUIRE(b.eulerian);
  CHECK(*a.witness == *b.witness);
  CHECK_THROWS_AS(eulerian_check_inf(Composition({1}), {RatFunc(Poly(F, {0, 0, 1}))}, 4), DomainError);
}
