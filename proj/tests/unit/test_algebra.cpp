#include <random>

#include "cmpl/ext.hpp"
#include "cmpl/frac.hpp"
#include "cmpl/tau.hpp"
#include "doctest.h"

using namespace cmpl;

namespace {

Poly P(const FieldPtr& F, std::vector<Fq> c) { return Poly(F, std::move(c)); }

Poly random_poly(const FieldPtr& F, std::mt19937_64& rng, int maxdeg) {
  std::vector<Fq> c(static_cast<std::size_t>(rng() % (maxdeg + 1) + 1));
  for (auto& x : c) x = static_cast<Fq>(rng() % F->q());
  return Poly(F, c);
}

}  // namespace

TEST_CASE("F_q arithmetic") {
  auto F9 = FqField::of_order(9);
  for (Fq a = 1; a < 9; ++a) CHECK(F9->mul(a, F9->inv(a)) == 1);
  for (Fq a = 0; a < 9; ++a) CHECK(F9->pow(a, 9) == a);
  auto F4 = FqField::of_order(4);
  CHECK(F4->add(F4->generator(), F4->generator()) == 0);
}

TEST_CASE("poly arithmetic over F_3") {
  auto F = FqField::of_order(3);
  CHECK(P(F, {1, 1}) * P(F, {2, 1}) == P(F, {2, 0, 1}));
  const Poly a = P(F, {2, 0, 1, 1});
  CHECK(a * Poly::one(F) == a);
  CHECK(modinv(P(F, {1, 1}), Poly::monomial(F, 1, 3)) == P(F, {1, 2, 1}));
  CHECK(Poly::theta(F).frobenius() == Poly::monomial(F, 1, 3));
  CHECK(P(F, {1, 1}).frobenius() == P(F, {1, 0, 0, 1}));
  CHECK_THROWS(modinv(Poly::theta(F), P(F, {0, 0, 1})));
  CHECK_THROWS(Poly::divrem(a, Poly(F)));
}

TEST_CASE("ring axioms and frobenius on random polynomials") {
  auto F = FqField::of_order(3);
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    Poly a = random_poly(F, rng, 12), b = random_poly(F, rng, 12), c = random_poly(F, rng, 12);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
    CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
    if (!b.is_zero()) {
      auto [qt, r] = Poly::divrem(a, b);
      CHECK(qt * b + r == a);
      CHECK(r.deg() < b.deg());
    }
    if (!c.is_zero() && c.deg() > 0 && gcd(a, c).is_one()) CHECK((modinv(a, c) * a % c).is_one());
  }
}

TEST_CASE("large products agree with schoolbook") {
  auto F = FqField::of_order(5);
  std::mt19937_64 rng(11);
  for (int it = 0; it < 5; ++it) {
    Poly a = random_poly(F, rng, 400), b = random_poly(F, rng, 300);
    std::vector<Fq> ref(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) ref[i + j] = F->add(ref[i + j], F->mul(a.coeff(i), b.coeff(j)));
    CHECK(a * b == Poly(F, ref));
  }
}

TEST_CASE("rational functions") {
  auto F = FqField::of_order(3);
  RatFunc x(P(F, {0, 1}), P(F, {2, 1}));
  RatFunc y(P(F, {1, 1}), P(F, {0, 0, 1}));
  CHECK((x + y) - y == x);
  CHECK((x * y) / y == x);
  CHECK(x * x.inv() == RatFunc::constant(F, 1));
  CHECK(RatFunc(P(F, {0, 2}), P(F, {0, 1})) == RatFunc::constant(F, 2));
  CHECK(x.pow(-2) * x.pow(2) == RatFunc::constant(F, 1));
}

TEST_CASE("quadratic extension k[x]/(x^2 - 2 theta) over F_3") {
  auto F = FqField::of_order(3);
  auto K = ExtField::make(F, {P(F, {0, 1}), Poly(F), Poly::one(F)});
  ExtElem x = ExtElem::generator(K);
  ExtElem xx = x * x;
  REQUIRE(xx.in_base());
  CHECK(xx.to_ratfunc() == RatFunc(P(F, {0, 2})));
  CHECK(x + ExtElem(K) == x);
  ExtElem x3 = x.frobenius();
  auto c = x3.coords();
  CHECK(c[0].is_zero());
  CHECK(c[1] == RatFunc(P(F, {0, 2})));
  ExtElem y = ExtElem::from_coords(K, {RatFunc(P(F, {1, 1})), RatFunc(Poly::one(F), P(F, {2, 1}))});
  CHECK(y * y.inv() == ExtElem::from_poly(K, Poly::one(F)));
  CHECK((x * y).frobenius() == x.frobenius() * y.frobenius());
  CHECK_THROWS_AS(ExtElem(K).inv(), DomainError);
  CHECK_THROWS_AS(ExtField::make(F, {P(F, {0, 0, 2}), Poly(F), Poly::one(F)}), DomainError);
}

TEST_CASE("lazy fractions") {
  auto F = FqField::of_order(3);
  auto K = ExtField::trivial(F);
  const Poly key = P(F, {0, 2, 0, 1});  // theta^3 - theta
  Frac a = Frac(AxElem::from_poly(K, Poly::one(F))).div_key(key, 2);
  Frac b = Frac(AxElem::from_poly(K, Poly::theta(F))).div_key(key, 1);
  ExtElem ea = a.to_ext(), eb = b.to_ext();
  CHECK((a + b).to_ext() == ea + eb);
  CHECK((a * b).to_ext() == ea * eb);
  CHECK(a.frobenius(2).to_ext() == ea.frobenius(2));
}

TEST_CASE("twisted polynomials") {
  auto F = FqField::of_order(3);
  auto K = ExtField::trivial(F);
  auto scalar = [&](const Poly& p) {
    ExtMatrix m = ext_zero_matrix(1, 1, K);
    m(0, 0) = ExtElem::from_poly(K, p);
    return m;
  };
  const ExtMatrix zero = ext_zero_matrix(1, 1, K);
  TauMatrixPoly tau({zero, scalar(Poly::one(F))});
  TauMatrixPoly th = TauMatrixPoly::constant(scalar(Poly::theta(F)));
  CHECK(tau * th == TauMatrixPoly({zero, scalar(Poly::monomial(F, 1, 3))}));
  TauMatrixPoly f = th + tau;
  CHECK(f * TauMatrixPoly::constant(ext_identity(1, K)) == f);
  TauMatrixPoly expect({scalar(Poly::monomial(F, 1, 2)), scalar(P(F, {0, 1, 0, 1})), scalar(Poly::one(F))});
  CHECK(f * f == expect);
  CHECK(((f * tau) * th) == (f * (tau * th)));
  CHECK((f * th).partial() == f.partial() * th.partial());
}
