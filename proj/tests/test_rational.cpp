#include "brm/rational.hpp"
#include "brm/serialize.hpp"

#include <doctest.h>

using namespace brm;

namespace {
RationalFunction R(const char* s) { return parse_rational(s); }
Polynomial P(const char* s) { return parse_polynomial(s); }
}  // namespace

TEST_SUITE("rational") {

TEST_CASE("normal form") {
  // common factor, content and monomial cancel; denominator leads positive
  RationalFunction f(P("2*x[1,1]^2 + 2*x[1,1]*x[2,1]"), P("-4*x[1,1]"));
  CHECK(f.num() == P("-x[1,1] - x[2,1]"));
  CHECK(f.den() == Polynomial(2));
  CHECK(RationalFunction(P("x[1,1]"), P("x[1,1]")).same_form(RationalFunction(1)));
  CHECK_THROWS_AS(RationalFunction(P("x[1,1]"), Polynomial()), std::domain_error);
}

TEST_CASE("field operations") {
  auto a = R("x[1,1]/(x[1,2] + x[2,1])"), b = R("(x[1,2] + x[2,1])/x[1,1]");
  CHECK((a * b).same_form(RationalFunction(1)));
  CHECK(rf_eq(a.inverse(), b));
  CHECK(rf_eq(a + a, R("2*x[1,1]/(x[1,2] + x[2,1])")));
  CHECK((a - a).is_zero());
  CHECK(rf_eq(a / a, RationalFunction(1)));
  CHECK(rf_eq(-(-a), a));
  CHECK(rf_eq(R("1/x[1,1] + 1/x[2,1]"), R("(x[1,1] + x[2,1])/(x[1,1]*x[2,1])")));
  CHECK_THROWS(RationalFunction().inverse());
}

TEST_CASE("rf_eq by cross multiplication") {
  RationalFunction a(P("x[1,1]^2 - x[2,1]^2"), P("x[1,1] - x[2,1]"));
  CHECK(rf_eq(a, R("x[1,1] + x[2,1]")));
  CHECK_FALSE(rf_eq(a, R("x[1,1] - x[2,1]")));
}

}
