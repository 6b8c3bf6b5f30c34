#include "brm/modular.hpp"
#include "brm/serialize.hpp"

#include <doctest.h>

using namespace brm;

TEST_SUITE("modular") {

TEST_CASE("field arithmetic mod 2^61-1") {
  const auto p = kDefaultPrime;
  ModP a(123456789, p), b(p - 1, p);
  CHECK((a + b).value() == 123456788);
  CHECK((b * b).value() == 1);
  CHECK((a * a.inverse()).value() == 1);
  CHECK((a - a).is_zero());
  CHECK(ModP(2, p).pow(61).value() == 1);
  CHECK(ModP::from_integer(-1, p) == b);
  CHECK_THROWS_AS(ModP(0, p).inverse(), ZeroDenominator);
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(3);
  auto pt = FieldPoint::random(3, 3, rng);
  auto f = parse_polynomial("x[1,1]^3*x[2,2] - 7*x[3,3] + 5");
  auto g = parse_polynomial("x[2,1] + x[3,2]^2");
  CHECK(pt.eval(f * g) == pt.eval(f) * pt.eval(g));
  CHECK(pt.eval(f + g) == pt.eval(f) + pt.eval(g));
  CHECK(pt.eval(RationalFunction(f, g)) == pt.eval(f) / pt.eval(g));
}

TEST_CASE("points and zero denominators") {
  FieldPoint pt(2, 2, 101);
  pt.set(Variable{1, 1}, 3);
  pt.set(Variable{1, 2}, 3);
  CHECK_THROWS_AS(pt.at(Variable{2, 1}), std::out_of_range);
  auto d = parse_polynomial("x[1,1] - x[1,2]");
  CHECK_THROWS_AS(pt.eval(RationalFunction(Polynomial(1), d)), ZeroDenominator);
  std::mt19937_64 a(9), b(9);
  auto p1 = FieldPoint::random(3, 2, a), p2 = FieldPoint::random(3, 2, b);
  CHECK(p1.at(Variable{2, 3}) == p2.at(Variable{2, 3}));
}

}
