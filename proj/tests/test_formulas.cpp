#include "brm/formulas.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <optional>
#include <random>

using namespace brm;

namespace {

// Closed forms against the plain R-matrix at a random point; n = 2 with short
// words is also compared exactly.
struct Action {
  FieldPoint pt;
  oracle::TupleOf<ModP> at_pt;
  std::optional<oracle::Tuple> exact;
};

Action act(int n, int m, const Word& w) {
  static std::mt19937_64 rng(5);
  Action a{FieldPoint::random(n, m, rng), {}, std::nullopt};
  a.at_pt = oracle::apply(oracle::at_point(a.pt), w);
  if (n == 2 && m <= 3) a.exact = oracle::apply(oracle::symbolic(n, m), w);
  return a;
}

bool matches(const FactoredRational& f, const Action& a, int i, long long r) {
  const int n = a.pt.n();
  const int rr = residue(r, n) - 1;
  if (a.exact && !rf_eq(f.expand(), (*a.exact)[i - 1][rr])) return false;
  return f.eval(a.pt) == a.at_pt[i - 1][rr];
}

}  // namespace

TEST_SUITE("formulas") {

TEST_CASE("words") {
  CHECK(oneshift_word(1, 3, Shift::Down) == Word{1, 2});
  CHECK(oneshift_word(1, 3, Shift::Up) == Word{2, 1});
  CHECK(family_word(1, 4, 2, Family::First) == Word{1, 2, 3, 2});
  CHECK(family_word(1, 4, 3, Family::Dual) == Word{3, 2, 1, 2});
  CHECK(conjugate_word(1, 4) == Word{1, 2, 3, 2, 1});
}

TEST_CASE("1-shifts against the plain R-matrix") {
  for (int n = 2; n <= 3; ++n)
    for (int j = 2; j <= 4; ++j)
      for (Shift dir : {Shift::Down, Shift::Up}) {
        auto t = act(n, j, oneshift_word(1, j, dir));
        for (int target = 1; target <= j; ++target)
          for (int r = 1; r <= n; ++r)
            CHECK(matches(oneshift_action(n, 1, j, target, r, dir), t, target, r));
      }
}

TEST_CASE("transpositions against the plain R-matrix") {
  for (int n = 2; n <= 4; ++n)
    for (int j = 3; j <= 4; ++j) {
      for (int k = 1; k < j; ++k) {
        auto t = act(n, j, family_word(1, j, k, Family::First));
        for (int r = 1; r <= n; ++r) CHECK(matches(trans_action(n, 1, j, k, r), t, k, r));
      }
      for (int k = 2; k <= j; ++k) {
        auto t = act(n, j, family_word(1, j, k, Family::Dual));
        for (int r = 1; r <= n; ++r) CHECK(matches(trans_action_dual(n, 1, j, k, r), t, k, r));
      }
      auto c = act(n, j, conjugate_word(1, j));
      for (int k = 2; k < j; ++k)
        for (int r = 1; r <= n; ++r) CHECK(matches(trans_conjugate(n, 1, j, k, r), c, k, r));
    }
}

TEST_CASE("full tuple after a family word") {
  const int n = 3, m = 4;
  for (int k = 1; k < m; ++k) {
    auto got = full_action(n, m, 1, m, k, Family::First);
    auto want = act(n, m, family_word(1, m, k, Family::First));
    for (int i = 1; i <= m; ++i)
      for (int r = 1; r <= n; ++r) CHECK(matches(got.at(i, r), want, i, r));
  }
}

TEST_CASE("shifted windows") {
  // i = 2 inside m = 4
  auto t = act(2, 4, oneshift_word(2, 4, Shift::Down));
  for (int target = 2; target <= 4; ++target)
    for (int r = 1; r <= 2; ++r) CHECK(matches(oneshift_action(2, 2, 4, target, r, Shift::Down), t, target, r));
}

TEST_CASE("argument checks") {
  CHECK_THROWS(trans_kappa(3, 1, 3, 1, 1));
  CHECK_THROWS(trans_action_dual(3, 1, 3, 1, 1));
  CHECK_THROWS(full_action(3, 3, 1, 2, 1, Family::First));
}

}
