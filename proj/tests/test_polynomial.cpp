#include "brm/polynomial.hpp"
#include "brm/serialize.hpp"

#include <doctest.h>

#include <random>

using namespace brm;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int n, int m, int terms, int max_exp) {
  std::uniform_int_distribution<int> vec(1, m), sup(1, n), ex(0, max_exp), co(-5, 5), nv(0, 3);
  std::vector<Polynomial::Term> t;
  for (int i = 0; i < terms; ++i) {
    Monomial mono;
    for (int k = nv(rng); k > 0; --k) {
      int e = ex(rng);
      if (e) mono = mono * Monomial(Variable{vec(rng), sup(rng)}, e);
    }
    t.push_back({mono, co(rng)});
  }
  return Polynomial::from_terms(std::move(t));
}

Polynomial P(const char* s) { return parse_polynomial(s); }

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("residue and variables") {
  CHECK(residue(0, 4) == 4);
  CHECK(residue(5, 4) == 1);
  CHECK(residue(-1, 4) == 3);
  CHECK(residue(-8, 4) == 4);
  CHECK(Variable::make(2, -3, 4) == Variable{2, 1});
}

TEST_CASE("graded lex order") {
  Monomial a(Variable{1, 1}), b(Variable{1, 2}), c(Variable{2, 1});
  CHECK(a > b);
  CHECK(b > c);
  CHECK(Monomial(Variable{2, 1}, 2) > a);  // degree first
  auto p = P("x[2,1] + x[1,2] + x[1,1] + x[3,3]^2");
  REQUIRE(p.size() == 4);
  CHECK(p.leading().mono == Monomial(Variable{3, 3}, 2));
  CHECK(p.trailing().mono == c);
}

TEST_CASE("canonical form drops zeros and merges") {
  auto p = Polynomial::from_terms({{Monomial(Variable{1, 1}), 2},
                                   {Monomial(Variable{1, 1}), -2},
                                   {Monomial(), 0},
                                   {Monomial(Variable{2, 1}), 1},
                                   {Monomial(Variable{2, 1}), 3}});
  CHECK(p == Polynomial(Monomial(Variable{2, 1}), 4));
  CHECK(Polynomial(0).is_zero());
  CHECK(Polynomial(1).is_one());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 40; ++it) {
    auto a = random_poly(rng, 3, 3, 5, 2), b = random_poly(rng, 3, 3, 4, 2),
         c = random_poly(rng, 3, 3, 3, 2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Polynomial());
    CHECK(a * Polynomial(1) == a);
    CHECK((a * Polynomial()).is_zero());
  }
}

TEST_CASE("exact division") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 30; ++it) {
    auto a = random_poly(rng, 2, 3, 4, 2), d = random_poly(rng, 2, 3, 3, 2);
    if (d.is_zero()) continue;
    auto q = divide_exact(a * d, d);
    REQUIRE(q);
    CHECK(*q == a);
  }
  // (x+y)^2 / (x+y) and a non-divisor
  auto s = P("x[1,1] + x[2,1]");
  CHECK(*divide_exact(s * s, s) == s);
  CHECK_FALSE(divide_exact(s * s + Polynomial(1), s));
  // monomial divisor
  CHECK(*divide_exact(P("x[1,1]^2*x[2,1] + x[1,1]*x[2,2]"), P("x[1,1]")) ==
        P("x[1,1]*x[2,1] + x[2,2]"));
  CHECK_FALSE(divide_exact(P("x[1,1] + 1"), P("x[1,1]")));
  // rational quotient is rejected
  CHECK_FALSE(divide_exact(P("x[1,1] + x[2,1]"), P("2*x[1,1] + 2*x[2,1]")));
  CHECK_THROWS_AS(divide_exact(s, Polynomial()), std::domain_error);
  CHECK(divide_exact(Polynomial(), s)->is_zero());
}

TEST_CASE("content and helpers") {
  auto p = P("6*x[1,1]^2*x[2,1] - 4*x[1,1]*x[2,1]^3");
  CHECK(p.content() == 2);
  CHECK(p.monomial_content() == Monomial(Variable{1, 1}) * Monomial(Variable{2, 1}));
  CHECK_FALSE(p.subtraction_free());
  CHECK(p.total_degree() == 4);
  CHECK(P("x[1,1] + 1").pow(3) == P("x[1,1]^3 + 3*x[1,1]^2 + 3*x[1,1] + 1"));
  CHECK(p.hash() == P("-4*x[1,1]*x[2,1]^3 + 6*x[1,1]^2*x[2,1]").hash());
}

}
