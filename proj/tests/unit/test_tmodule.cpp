#include <random>

#include "cmpl/errors.hpp"
#include "cmpl/lsequence.hpp"
#include "cmpl/tmodule.hpp"
#include "doctest.h"

using namespace cmpl;

namespace {

ExtElem P(const ExtPtr& K, std::vector<Fq> c) { return ExtElem::from_poly(K, Poly(K->base(), std::move(c))); }

ExtElem random_elem(const ExtPtr& K, std::mt19937_64& rng, int deg) {
  std::vector<Fq> c;
  std::uniform_int_distribution<unsigned> d(0, K->base()->q() - 1);
  for (int i = 0; i <= deg; ++i) c.push_back(d(rng));
  if (c.back() == 0) c.back() = 1;
  return P(K, c);
}

// log o rho_t = d rho_t o log, coefficient of tau^(i+1).
void check_log_equation(const TModule& G, std::size_t I) {
  const auto Ps = G.log_coeffs(I);
  const ExtMatrix D = G.d_rho_t();
  for (std::size_t i = 0; i < I; ++i) {
    const ExtMatrix Pi = Ps[i].to_ext();
    const ExtMatrix Pn = Ps[i + 1].to_ext();
    const ExtMatrix lhs = Pn * twist(D, static_cast<unsigned>(i + 1)) + Pi * twist(G.E(), static_cast<unsigned>(i));
    CHECK(lhs == D * Pn);
  }
}

void check_exp_equation(const TModule& G, std::size_t I) {
  const auto Qs = G.exp_coeffs(I);
  const ExtMatrix D = G.d_rho_t();
  for (std::size_t i = 1; i <= I; ++i) {
    const ExtMatrix Qi = Qs[i].to_ext();
    const ExtMatrix lhs = Qi * twist(D, static_cast<unsigned>(i));
    CHECK(lhs == D * Qi + G.E() * twist(Qs[i - 1].to_ext(), 1));
  }
}

}  // namespace

TEST_CASE("t-module shapes") {
  auto F = FqField::of_order(3);
  auto K = ExtField::trivial(F);
  const ExtElem u1 = P(K, {1, 1}), u2 = P(K, {0, 1}), u3 = P(K, {2, 0, 1});
  TModule G1(Composition({2}), {u1});
  CHECK(G1.dim() == 2);
  CHECK(G1.E()(1, 0) == P(K, {1}));
  CHECK(G1.N()(0, 1) == P(K, {1}));

  TModule G2(Composition({1, 1}), {u1, u2});
  CHECK(G2.dim() == 3);
  CHECK(G2.E()(1, 0) == P(K, {1}));
  CHECK(G2.E()(1, 2) == -u1);
  CHECK(G2.E()(2, 2) == P(K, {1}));
  CHECK(G2.E()(0, 0).is_zero());
  const ExtVector sp = G2.special_point();
  CHECK(sp[0].is_zero());
  CHECK(sp[1] == -(u1 * u2));
  CHECK(sp[2] == u2);

  TModule G3(Composition({1, 2, 1}), {u1, u2, u3});
  CHECK(G3.dim() == 4 + 3 + 1);
  CHECK(G3.E()(3, 7) == u1 * u2);
  const ExtVector sp3 = G3.special_point();
  CHECK(sp3[3] == u1 * u2 * u3);
  CHECK(sp3[6] == -(u2 * u3));
  CHECK(sp3[7] == u3);

  CHECK_THROWS_AS(TModule(Composition({1, 1}), {u1, ExtElem(K)}), DomainError);
  CHECK_THROWS_AS(TModule(Composition({1, 1}), {u1}), DomainError);
}

TEST_CASE("Carlitz module") {
  auto F = FqField::of_order(3);
  auto K = ExtField::trivial(F);
  TModule C(Composition({1}), {P(K, {1})});
  const TauMatrixPoly r2 = C.rho(Poly(F, {0, 0, 1}));
  REQUIRE(r2.degree() == 2);
  CHECK(r2.coeff(0)(0, 0) == P(K, {0, 0, 1}));
  CHECK(r2.coeff(1)(0, 0) == P(K, {0, 1, 0, 1}));
  CHECK(r2.coeff(2)(0, 0) == P(K, {1}));

  LSequence Ls(F);
  const auto Ps = C.log_coeffs(4);
  const auto Qs = C.exp_coeffs(4);
  for (std::size_t i = 0; i <= 4; ++i) {
    CHECK(Ps[i].to_ext()(0, 0) == ExtElem::from_ratfunc(K, RatFunc(Poly::one(F), Ls.L(i))));
    CHECK(Qs[i].to_ext()(0, 0) == ExtElem::from_ratfunc(K, RatFunc(Poly::one(F), Ls.D(i))));
  }
}

TEST_CASE("rho is a ring homomorphism") {
  auto F = FqField::of_order(3);
  auto K = ExtField::trivial(F);
  std::mt19937_64 rng(7);
  TModule G(Composition({1, 2}), {P(K, {0, 1}), P(K, {1, 0, 1})});
  const Poly a(F, {1, 2, 1}), b(F, {0, 1, 1});
  CHECK(G.rho(a * b) == G.rho(a) * G.rho(b));
  CHECK(G.rho(a) * G.rho(b) == G.rho(b) * G.rho(a));
  CHECK(G.rho(a + b) == G.rho(a) + G.rho(b));
  CHECK(G.rho(a).partial() == G.d_rho(a));
  ExtVector w;
  for (std::size_t i = 0; i < G.dim(); ++i) w.push_back(random_elem(K, rng, 2));
  CHECK(G.apply(a * b, w) == G.apply(a, G.apply(b, w)));
  CHECK(G.apply(a, w) == G.rho(a).apply(w));
  CHECK(G.apply_t(w) == G.rho_t().apply(w));
}

TEST_CASE("nilpotent Sylvester solve") {
  auto F = FqField::of_order(3);
  auto K = ExtField::trivial(F);
  std::mt19937_64 rng(11);
  TModule G(Composition({2, 1}), {P(K, {1}), P(K, {1})});
  const ExtMatrix N = G.N();
  const ExtElem th = P(K, {0, 1});
  for (int trial = 0; trial < 5; ++trial) {
    ExtMatrix C = ext_zero_matrix(G.dim(), G.dim(), K);
    for (std::size_t a = 0; a < G.dim(); ++a)
      for (std::size_t b = 0; b < G.dim(); ++b) C(a, b) = random_elem(K, rng, 2);
    const ExtElem c = P(K, {0, 0, 0, 1});
    const ExtMatrix X = solve_nilpotent_sylvester(c, N, C);
    CHECK(X.map([&](const ExtElem& x) { return x * (c - th); }) + X * N - N * X == C);
    const FracMatrix Y = solve_nilpotent_sylvester(frobenius_key(F, 1), G.superdiagonal(), FracMatrix::from_ext(C));
    CHECK(Y.to_ext() == X);
  }
  CHECK_THROWS_AS(solve_nilpotent_sylvester(th, N, N), DomainError);
}

TEST_CASE("log and exp coefficient recurrences") {
  auto F = FqField::of_order(3);
  auto K = ExtField::trivial(F);
  TModule G2(Composition({1, 2}), {P(K, {0, 1}), P(K, {1, 1})});
  check_log_equation(G2, 3);
  check_exp_equation(G2, 3);
  auto Kx = ExtField::make(F, {Poly(F, {0, 1}), Poly(F), Poly(F, {1})});
  TModule Gx(Composition({1, 1}), {ExtElem::generator(Kx), P(Kx, {1, 1})});
  check_log_equation(Gx, 2);
  check_exp_equation(Gx, 2);
}

TEST_CASE("closed-form corners of log coefficients") {
  auto F = FqField::of_order(3);
  auto K = ExtField::trivial(F);
  for (const auto& [s, I] : std::vector<std::pair<std::vector<int>, std::size_t>>{{{1, 1}, 4}, {{2, 1}, 3}, {{1, 1, 1}, 3}}) {
    std::vector<ExtElem> u;
    for (std::size_t k = 0; k < s.size(); ++k) u.push_back(P(K, {static_cast<Fq>(k % 3), 1}));
    TModule G((Composition(s)), u);
    const auto Ps = G.log_coeffs(I);
    for (std::size_t i = 0; i <= I; ++i)
      for (std::size_t l = 0; l < s.size(); ++l)
        for (std::size_t m = 0; m < s.size(); ++m) {
          const Frac got = Ps[i].entry(static_cast<std::size_t>(G.index().bottom(l)), static_cast<std::size_t>(G.index().bottom(m)));
          CHECK(got == G.closed_form_corner(i, l, m));
        }
  }
}
