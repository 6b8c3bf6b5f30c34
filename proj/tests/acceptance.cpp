// One line per acceptance criterion.  Exit status is the number of failures.

#include "brm/cylnet.hpp"
#include "brm/rmatrix.hpp"
#include "brm/serialize.hpp"
#include "brm/specialfn.hpp"
#include "brm/verify.hpp"
#include "fixtures.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

using namespace brm;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void need(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void need(const VerifyReport& r) {
    bool clean = r.passed() && r.count(CaseStatus::Skipped) == 0 && !r.cases.empty();
    std::string what = r.summary();
    if (const auto* f = r.first_failure()) what += "; first failure " + f->descriptor + " " + f->note;
    need(clean, what);
  }
};

VerifyConfig grid(int max_n, int max_m) {
  VerifyConfig c;
  c.max_n = max_n;
  c.max_m = max_m;
  return c;
}

VerifyConfig modular(int n, int m) {
  VerifyConfig c;
  c.n = n;
  c.m = m;
  c.mode = Mode::Modular;
  c.points = 20;
  return c;
}

std::map<std::string, VerifyReport> cache;
const VerifyReport& suite(const std::string& name, const VerifyConfig& c) {
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, run_suite(name, c)).first;
  return it->second;
}

Polynomial poly(const char* s) { return parse_polynomial(s, 4); }

struct Criterion {
  int id;
  const char* title;
  double limit;  // seconds, 0 = none
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "involution n=2..4 m=2", 5,
       [] {
         Outcome o;
         auto c = grid(4, 2);
         o.need(run_suite("involution", c));
         return o;
       }},
      {2, "braid relation", 30,
       [] {
         Outcome o;
         o.need(run_suite("braid", grid(3, 3)));
         auto c = modular(4, 3);
         o.need(run_suite("braid", c));
         return o;
       }},
      {3, "a_2' for n=4", 0,
       [] {
         Outcome o;
         auto t = apply_word(symbolic_tuple<FactoredRational>(4, 2), {1});
         std::string got = to_text(t.at(2, 2).expand());
         std::string want = to_text(parse_rational(fixture::kA2Prime, 4));
         o.need(got == want, got);
         return o;
       }},
      {4, "tau_5, sigma_5, sigma-bar_5 for n=4", 0,
       [] {
         Outcome o;
         o.need(tau(4, 1, 2, 5, 3) == poly(fixture::kTau5), "tau");
         o.need(sigma(4, 1, 2, 5, 3) == poly(fixture::kSigma5), "sigma");
         o.need(sigma_bar(4, 1, 2, 5, 3) == poly(fixture::kSigmaBar5), "sigma-bar");
         return o;
       }},
      {5, "1-shift closed forms", 60,
       [] {
         Outcome o;
         auto c = grid(3, 4);
         c.max_span = 3;
         o.need(run_suite("oneshift", c));
         VerifyConfig d;
         d.n = 4;
         d.max_m = 3;
         d.max_span = 2;
         o.need(run_suite("oneshift", d));
         return o;
       }},
      {6, "transposition closed forms", 120,
       [] {
         Outcome o;
         o.need(run_suite("transposition", grid(3, 4)));
         o.need(run_suite("transposition", modular(4, 4)));
         return o;
       }},
      {7, "sigma identity n<=4, windows<=4", 0,
       [] {
         Outcome o;
         o.need(run_suite("sigma-identity", grid(4, 4)));
         return o;
       }},
      {8, "partial sums", 0,
       [] {
         Outcome o;
         auto T = fixture::partial_sum_terms();
         for (int s = 0; s < 4; ++s)
           o.need(t_s(4, 1, 3, s, 4) == T[s], "T_" + std::to_string(s));
         int idx = 0;
         for (const auto& [lhs, rhs] : fixture::partial_sum_claims())
           o.need(lhs == rhs, "display " + std::to_string(++idx));
         o.need(s_up(4, 1, 3, 3, 4) == s_down(4, 1, 3, 0, 4), "S^{n-1} = S_0");
         o.need(run_suite("partial-sums", grid(3, 4)));
         return o;
       }},
      {9, "Omega identity and two-sum lemma", 0,
       [] {
         Outcome o;
         auto [lhs, rhs] = omega_identity_sides(4, 1, 4, 3, 4);
         o.need(lhs == fixture::omega_example_lhs(), "example left side");
         auto terms = fixture::omega_example_terms();
         Polynomial sum;
         for (int s = 0; s < 4; ++s) {
           o.need(omega_identity_term(4, 1, 4, 3, 4, s) == terms[s], "term " + std::to_string(s));
           sum += terms[s];
         }
         o.need(sum == rhs && lhs == rhs, "example sum");
         o.need(run_suite("omega-identity", grid(3, 4)));
         const auto& two = run_suite("two-sums", grid(3, 4));
         o.need(two);
         int overlap = 0;
         for (const auto& c : two.cases)
           for (int n = 2; n <= 3; ++n)
             if (c.descriptor.find("n=" + std::to_string(n) + " ") == 0 &&
                 c.descriptor.find("m-q=" + std::to_string(n - 1) + " ") != std::string::npos)
               ++overlap;
         o.need(overlap > 0, "no overlap cases ran");
         return o;
       }},
      {10, "combinatorial generating functions", 120,
       [] {
         Outcome o;
         auto c = grid(4, 4);
         o.need(run_suite("comb-tau", c));
         o.need(run_suite("comb-sigma", c));
         o.need(suite("comb-omega", c));
         o.need(enumerate_families(tau_class(4, 2, 3, 5, DegreeMode::Exact)).size() == 2, "tau_5 families");
         auto t8 = enumerate_families(tau_class(3, 4, 3, 8, DegreeMode::Exact));
         o.need(t8.size() == 1 && Polynomial(t8[0].weight()) == poly(fixture::kTau8Weight), "tau_8 family");
         o.need(enumerate_families(tau_class(4, 2, 3, 5, DegreeMode::AtMost)).size() == 4, "sigma_5 families");
         o.need(Polynomial(omega_weight(fixture::family_q(), 3, 2).weight) == poly(fixture::kQOmega2Weight),
                "weight of Q");
         return o;
       }},
      {11, "degree lemma n<=4 m<=4", 0,
       [] {
         Outcome o;
         o.need(run_suite("degree-lemma", grid(4, 4)));
         return o;
       }},
      {12, "Omega family count independent of the cut", 0,
       [] {
         Outcome o;
         const auto& r = suite("comb-omega", grid(4, 4));
         int seen = 0;
         for (const auto& c : r.cases)
           if (c.descriptor.find("cardinality") != std::string::npos) {
             ++seen;
             o.need(c.status == CaseStatus::Pass, c.descriptor + " " + c.lhs + " vs " + c.rhs);
           }
         o.need(seen > 0, "no cardinality cases");
         return o;
       }},
      {13, "divisibility of s2*s3*s1*s2 (x_2^(1)), n=2", 30,
       [] {
         Outcome o;
         o.need(run_suite("divisibility-q1", {}));
         return o;
       }},
      {14, "loop-energy n<=3 m<=4", 0,
       [] {
         Outcome o;
         o.need(run_suite("loop-energy", grid(3, 4)));
         return o;
       }},
      {15, "switch connectivity n=3 m=3", 0,
       [] {
         Outcome o;
         VerifyConfig c;
         c.n = 3;
         c.m = 3;
         o.need(run_suite("switch-connectivity", c));
         return o;
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && c.limit > 0 && secs > c.limit) {
      o.ok = false;
      o.detail = "over the time limit";
    }
    failures += !o.ok;
    std::printf("criterion %2d %s  %s (%.2fs)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.title, secs,
                o.ok ? "" : ": ", o.ok ? "" : o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
