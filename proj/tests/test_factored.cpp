#include "brm/factored.hpp"
#include "brm/serialize.hpp"

#include <doctest.h>

using namespace brm;

namespace {
Polynomial P(const char* s) { return parse_polynomial(s); }
}  // namespace

TEST_SUITE("factored") {

TEST_CASE("products keep factors apart") {
  FactoredRational a(P("x[1,1] + x[2,1]")), b(P("x[1,2] + x[2,2]"));
  auto q = a * b / a;
  CHECK(q.same_form(b));
  CHECK((a / a).is_one());
  CHECK(a.pow(3).factors().size() == 1);
  CHECK(a.pow(3).factors()[0].exp == 3);
  CHECK(Factor::intern(P("x[1,1] + x[2,1]")) == Factor::intern(P("x[2,1] + x[1,1]")));
}

TEST_CASE("sums agree with expanded arithmetic") {
  auto fa = FactoredRational(P("x[1,1]")) / FactoredRational(P("x[1,2] + x[2,1]"));
  auto fb = FactoredRational(P("x[2,2]")) / FactoredRational(P("x[1,2] + x[2,1]"));
  auto s = fa + fb;
  auto expect = RationalFunction(P("x[1,1] + x[2,2]"), P("x[1,2] + x[2,1]"));
  CHECK(rf_eq(s.expand(), expect));
  CHECK((fa - fa).is_zero());
  // cancellation inside a sum: (x^2 - y^2)/(x - y) style
  auto g = FactoredRational(P("x[1,1]")) * FactoredRational(P("x[1,1]")) /
               FactoredRational(P("x[1,1] - x[2,1]")) -
           FactoredRational(P("x[2,1]")) * FactoredRational(P("x[2,1]")) /
               FactoredRational(P("x[1,1] - x[2,1]"));
  CHECK(equivalent(g, FactoredRational(P("x[1,1] + x[2,1]"))));
  CHECK(g.denominator().is_constant());
}

TEST_CASE("equivalent is exact") {
  auto a = FactoredRational(P("x[1,1]^2 + 2*x[1,1]*x[2,1] + x[2,1]^2"));
  auto b = FactoredRational(P("x[1,1] + x[2,1]")).pow(2);
  CHECK(equivalent(a, b));
  CHECK_FALSE(equivalent(a, b + FactoredRational(1)));
  CHECK(equivalent(FactoredRational(Rational(1, 2)) * a, a / FactoredRational(2)));
}

TEST_CASE("evaluation matches the expansion") {
  std::mt19937_64 rng(1);
  auto pt = FieldPoint::random(2, 2, rng);
  auto f = FactoredRational(P("x[1,1] + x[2,2]")) / FactoredRational(P("x[1,2] + 3*x[2,1]"));
  CHECK(f.eval(pt) == pt.eval(f.expand()));
}

}
