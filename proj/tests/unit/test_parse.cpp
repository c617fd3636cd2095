#include "cmpl/errors.hpp"
#include "cmpl/parse.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cmpl;

TEST_CASE("element syntax") {
  auto F = FqField::of_order(3);
  auto K = ExtField::trivial(F);
  CHECK(parse_poly(F, "theta+1") == Poly(F, {1, 1}));
  CHECK(parse_poly(F, "2theta") == Poly(F, {0, 2}));
  CHECK(parse_poly(F, "-theta^2 + 4") == Poly(F, {1, 0, 2}));
  CHECK(parse_poly(F, "(theta+1)*(theta+2)") == Poly(F, {2, 0, 1}));
  CHECK(parse_poly(F, "(theta^2+2)/(theta+1)") == Poly(F, {2, 1}));
  CHECK(parse_elem(K, "theta^2/(theta^2+1)") ==
        ExtElem::from_ratfunc(K, RatFunc(Poly(F, {0, 0, 1}), Poly(F, {1, 0, 1}))));
  CHECK(parse_t_poly(F, golden()["multiplier_r2"]["a"].get<std::string>()) == Poly(F, {1, 2, 2, 1}));

  const auto m = parse_minpoly(F, "x^2-2*theta");
  REQUIRE(m.size() == 3);
  CHECK(m[0] == Poly(F, {0, 1}));
  CHECK(m[1].is_zero());
  auto Kx = ExtField::make(F, m);
  const ExtElem x = parse_elem(Kx, "x");
  CHECK(x * x == parse_elem(Kx, "2*theta"));
  const auto u = parse_tuple(Kx, "x;theta+1; 2");
  REQUIRE(u.size() == 3);
  CHECK(u[2] == ExtElem::from_poly(Kx, Poly::constant(F, 2)));

  auto F9 = FqField::of_order(9);
  CHECK(parse_poly(F9, "g*theta").coeff(1) == F9->generator());

  CHECK_THROWS_AS(parse_poly(F, "theta+"), ParseError);
  CHECK_THROWS_AS(parse_poly(F, "y"), ParseError);
  CHECK_THROWS_AS(parse_poly(F, "theta/(theta+1)"), ParseError);
  CHECK_THROWS_AS(parse_poly(F, "theta^-1"), ParseError);
  CHECK_THROWS_AS(parse_elem(K, "1/(theta-theta)"), DomainError);
  CHECK_THROWS_AS(parse_elem(K, "x"), ParseError);
  CHECK_THROWS_AS(parse_minpoly(F, "2x^2+1"), ParseError);
  CHECK_THROWS_AS(parse_poly(F, "(theta"), ParseError);
}

TEST_CASE("index and digit lists") {
  CHECK(parse_composition("1,2").s() == std::vector<int>{1, 2});
  CHECK(parse_composition(" 3 ").s() == std::vector<int>{3});
  CHECK_THROWS_AS(parse_composition("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_composition("0"), ParseError);
  CHECK_THROWS_AS(parse_composition("a"), ParseError);
  CHECK(parse_digits("2,2,1") == std::vector<std::uint32_t>{2, 2, 1});
}
