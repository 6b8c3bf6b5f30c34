#include "brm/verify.hpp"

#include "brm/cylnet.hpp"
#include "brm/formulas.hpp"
#include "brm/rmatrix.hpp"
#include "brm/serialize.hpp"
#include "brm/specialfn.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace brm {

Mode parse_mode(std::string_view s) {
  if (s == "symbolic") return Mode::Symbolic;
  if (s == "modular") return Mode::Modular;
  throw std::invalid_argument("unknown mode '" + std::string(s) + "'");
}

std::string_view to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::Skipped: return "skipped";
  }
  return "?";
}

bool VerifyReport::passed() const { return count(CaseStatus::Fail) == 0; }

std::size_t VerifyReport::count(CaseStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [s](const CaseResult& c) { return c.status == s; }));
}

const CaseResult* VerifyReport::first_failure() const {
  for (const auto& c : cases)
    if (c.status == CaseStatus::Fail) return &c;
  return nullptr;
}

std::string VerifyReport::summary(bool with_time) const {
  std::ostringstream os;
  os << suite << ": " << (passed() ? "pass" : "FAIL") << " (" << count(CaseStatus::Pass)
     << " pass, " << count(CaseStatus::Fail) << " fail, " << count(CaseStatus::Skipped)
     << " skipped";
  os.precision(3);
  if (with_time) os << ", " << std::fixed << seconds << " s";
  os << ")";
  if (auto* f = first_failure()) os << " first failure: " << f->descriptor;
  return os.str();
}

nlohmann::json VerifyReport::to_json(bool with_time) const {
  nlohmann::json j;
  j["suite"] = suite;
  j["status"] = passed() ? "pass" : "fail";
  if (with_time) j["seconds"] = seconds;
  auto& arr = j["cases"] = nlohmann::json::array();
  for (const auto& c : cases) {
    nlohmann::json e{{"case", c.descriptor}, {"status", to_string(c.status)}};
    if (with_time) e["seconds"] = c.seconds;
    if (!c.lhs.empty()) e["lhs"] = c.lhs;
    if (!c.rhs.empty()) e["rhs"] = c.rhs;
    if (!c.note.empty()) e["note"] = c.note;
    arr.push_back(std::move(e));
  }
  return j;
}

const char* q1_factor_text() {
  return "x[1,1]*x[1,2]*x[2,1]*x[2,2] + x[1,1]*x[1,2]*x[2,1]*x[3,2]"
         " + x[1,2]*x[2,1]^2*x[3,2] + x[1,2]*x[2,1]*x[3,1]*x[3,2]"
         " + x[1,1]*x[1,2]*x[2,1]*x[4,2] + x[1,2]*x[2,1]^2*x[4,2]"
         " + x[1,1]*x[1,2]*x[3,1]*x[4,2] + 2*x[1,2]*x[2,1]*x[3,1]*x[4,2]"
         " + x[2,1]*x[2,2]*x[3,1]*x[4,2] + x[1,2]*x[3,1]^2*x[4,2]"
         " + x[2,2]*x[3,1]^2*x[4,2] + x[1,2]*x[2,1]*x[4,1]*x[4,2]"
         " + x[1,2]*x[3,1]*x[4,1]*x[4,2] + x[2,2]*x[3,1]*x[4,1]*x[4,2]"
         " + x[3,1]*x[3,2]*x[4,1]*x[4,2]";
}

namespace {

using Clock = std::chrono::steady_clock;
using FR = FactoredRational;

constexpr std::size_t kMaxShown = 4000;

std::string clip(std::string s) {
  if (s.size() > kMaxShown) s = s.substr(0, kMaxShown) + " ...";
  return s;
}

std::string show(const FR& f) { return clip(to_text(f.expand())); }
std::string show(const Polynomial& p) { return clip(to_text(p)); }
std::string show(const ModP& v) { return std::to_string(v.value()); }

std::vector<int> range_of(std::optional<int> exact, int lo, int hi) {
  std::vector<int> v;
  if (exact) {
    v.push_back(*exact);
  } else {
    for (int x = lo; x <= hi; ++x) v.push_back(x);
  }
  return v;
}

std::string desc(std::initializer_list<std::pair<const char*, long long>> kv) {
  std::string s;
  for (const auto& [k, v] : kv) {
    if (!s.empty()) s += ' ';
    s += k;
    s += '=';
    s += std::to_string(v);
  }
  return s;
}

// Outcome of one case body: empty optional = pass.
struct Mismatch {
  std::string lhs, rhs, note;
};
using Outcome = std::optional<Mismatch>;

class Runner {
 public:
  Runner(std::string suite, const VerifyConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
    report_.suite = std::move(suite);
  }

  void run(const std::string& descriptor, const std::function<Outcome()>& body) {
    CaseResult c;
    c.descriptor = descriptor;
    auto t0 = Clock::now();
    try {
      if (auto miss = body()) {
        c.status = CaseStatus::Fail;
        c.lhs = std::move(miss->lhs);
        c.rhs = std::move(miss->rhs);
        c.note = std::move(miss->note);
      }
    } catch (const GuardExceeded& e) {
      c.status = CaseStatus::Skipped;
      c.note = e.what();
    } catch (const std::exception& e) {
      c.status = CaseStatus::Fail;
      c.note = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    report_.cases.push_back(std::move(c));
  }

  // Calls body(pt) at cfg.points random points; points where a denominator
  // vanishes are replaced, up to a bounded number of retries.
  Outcome at_points(int n, int m, const std::function<Outcome(const FieldPoint&)>& body) {
    int good = 0, tries = 0;
    while (good < cfg_.points) {
      if (++tries > 4 * cfg_.points + 8)
        return Mismatch{"", "", "too many evaluation points hit a zero denominator"};
      FieldPoint pt = FieldPoint::random(n, m, rng_, cfg_.prime);
      try {
        if (auto miss = body(pt)) {
          miss->note = "point " + std::to_string(good) + (miss->note.empty() ? "" : ": " + miss->note);
          return miss;
        }
      } catch (const ZeroDenominator&) {
        continue;
      }
      ++good;
    }
    return std::nullopt;
  }

  const VerifyConfig& cfg() const { return cfg_; }
  std::mt19937_64& rng() { return rng_; }
  VerifyReport finish(double seconds) {
    report_.seconds = seconds;
    return std::move(report_);
  }

 private:
  const VerifyConfig& cfg_;
  std::mt19937_64 rng_;
  VerifyReport report_;
};

Outcome compare(const FR& a, const FR& b) {
  if (equivalent(a, b)) return std::nullopt;
  return Mismatch{show(a), show(b), ""};
}

Outcome compare(const Polynomial& a, const Polynomial& b) {
  if (a == b) return std::nullopt;
  return Mismatch{show(a), show(b), ""};
}

Outcome compare(const ModP& a, const ModP& b) {
  if (a == b) return std::nullopt;
  return Mismatch{show(a), show(b), ""};
}

template <class T>
Outcome compare_tuples(const Tuple<T>& a, const Tuple<T>& b) {
  for (int i = 1; i <= a.m(); ++i)
    for (int r = 1; r <= a.n(); ++r)
      if (auto miss = compare(a.at(i, r), b.at(i, r))) {
        miss->note = "entry (" + std::to_string(i) + "," + std::to_string(r) + ")";
        return miss;
      }
  return std::nullopt;
}

Outcome expect(bool ok, const char* what) {
  if (ok) return std::nullopt;
  return Mismatch{"", "", what};
}

// Compare two word actions entrywise (symbolic or at points).
Outcome words_agree(Runner& run, int n, int m, const Word& a, const Word& b) {
  if (run.cfg().mode == Mode::Symbolic) {
    auto x = symbolic_tuple<FR>(n, m);
    return compare_tuples(apply_word(x, a), apply_word(x, b));
  }
  return run.at_points(n, m, [&](const FieldPoint& pt) {
    auto x = point_tuple(pt);
    return compare_tuples(apply_word(x, a), apply_word(x, b));
  });
}

// ---------------------------------------------------------------------------

void suite_involution(Runner& run) {
  const auto& c = run.cfg();
  for (int n : range_of(c.n, 2, c.max_n))
    for (int m : range_of(c.m, 2, std::max(2, c.max_m)))
      for (int i = 1; i < m; ++i)
        run.run(desc({{"n", n}, {"m", m}, {"i", i}}),
                [&] { return words_agree(run, n, m, {i, i}, {}); });
}

void suite_braid(Runner& run) {
  const auto& c = run.cfg();
  for (int n : range_of(c.n, 2, c.max_n))
    for (int m : range_of(c.m, 3, std::max(3, c.max_m))) {
      for (int i = 1; i + 2 <= m; ++i)
        run.run(desc({{"n", n}, {"m", m}, {"i", i}}),
                [&] { return words_agree(run, n, m, {i, i + 1, i}, {i + 1, i, i + 1}); });
      for (int i = 1; i < m; ++i)
        for (int j = i + 2; j < m; ++j)
          run.run(desc({{"n", n}, {"m", m}, {"i", i}, {"j", j}}) + " commute",
                  [&] { return words_agree(run, n, m, {i, j}, {j, i}); });
    }
}

// Windows (i, j) for tuples of size m, skipping those already seen at a smaller m.
std::vector<std::pair<int, int>> windows(const VerifyConfig& c, int m, int min_m, int min_gap) {
  std::vector<std::pair<int, int>> w;
  for (int i = 1; i <= m; ++i)
    for (int j = i + min_gap; j <= m; ++j) {
      if (c.max_span && j - i > *c.max_span) continue;
      if (!c.m && m > min_m && j < m) continue;
      w.emplace_back(i, j);
    }
  return w;
}

// closed forms for one (i, j, dir): kappa for every r and every target entry
struct ShiftCase {
  Word prefix_kappa;  // word before the kappa pair
  int kappa_left;     // kappa(vec(kappa_left), vec(kappa_left + 1))
  Word word;
  std::vector<FR> kappa;                             // by r
  std::vector<std::tuple<int, int, FR>> entries;     // (target, r, value)
};

ShiftCase make_shift_case(int n, int i, int j, Shift dir) {
  ShiftCase sc;
  if (dir == Shift::Down) {
    for (int t = i; t <= j - 2; ++t) sc.prefix_kappa.push_back(t);
    sc.kappa_left = j - 1;
  } else {
    for (int t = j - 1; t >= i + 1; --t) sc.prefix_kappa.push_back(t);
    sc.kappa_left = i;
  }
  sc.word = oneshift_word(i, j, dir);
  for (int r = 1; r <= n; ++r) sc.kappa.push_back(oneshift_kappa(n, i, j, r, dir));
  for (int t = i; t <= j; ++t)
    for (int r = 1; r <= n; ++r) sc.entries.emplace_back(t, r, oneshift_action(n, i, j, t, r, dir));
  return sc;
}

template <class T, class Eval>
Outcome check_shift(const ShiftCase& sc, const Tuple<T>& x, int n, Eval eval) {
  auto pre = apply_word(x, sc.prefix_kappa);
  for (int r = 1; r <= n; ++r) {
    T k = kappa(pre.vec(sc.kappa_left), pre.vec(sc.kappa_left + 1), r);
    if (auto miss = compare(k, eval(sc.kappa[r - 1]))) {
      miss->note = "kappa r=" + std::to_string(r);
      return miss;
    }
  }
  auto post = apply_word(x, sc.word);
  for (const auto& [t, r, v] : sc.entries)
    if (auto miss = compare(post.at(t, r), eval(v))) {
      miss->note = "entry (" + std::to_string(t) + "," + std::to_string(r) + ")";
      return miss;
    }
  return std::nullopt;
}

void suite_oneshift(Runner& run) {
  const auto& c = run.cfg();
  for (int n : range_of(c.n, 2, c.max_n)) {
    auto ms = range_of(c.m, 2, std::max(2, c.max_m));
    for (int m : ms)
      for (auto [i, j] : windows(c, m, ms.front(), 1)) {
        for (Shift dir : {Shift::Down, Shift::Up})
          run.run(desc({{"n", n}, {"m", m}, {"i", i}, {"j", j}}) +
                      (dir == Shift::Down ? " down" : " up"),
                  [&]() -> Outcome {
                    ShiftCase sc = make_shift_case(n, i, j, dir);
                    if (c.mode == Mode::Symbolic)
                      return check_shift(sc, symbolic_tuple<FR>(n, m), n,
                                         [](const FR& f) { return f; });
                    return run.at_points(n, m, [&](const FieldPoint& pt) {
                      return check_shift(sc, point_tuple(pt), n,
                                         [&](const FR& f) { return f.eval(pt); });
                    });
                  });
      }
  }
}

struct TransCase {
  Word word;
  Tuple<FR> closed;
  int kappa_left = 0;  // 0 = no kappa check
  std::vector<FR> kappa = {};
};

template <class T, class Eval>
Outcome check_trans(const TransCase& tc, const Tuple<T>& x, int n, int lo, int hi, Eval eval) {
  auto post = apply_word(x, tc.word);
  for (int p = lo; p <= hi; ++p)
    for (int r = 1; r <= n; ++r)
      if (auto miss = compare(post.at(p, r), eval(tc.closed.at(p, r)))) {
        miss->note = "entry (" + std::to_string(p) + "," + std::to_string(r) + ")";
        return miss;
      }
  if (tc.kappa_left)
    for (int r = 1; r <= n; ++r) {
      T k = kappa(post.vec(tc.kappa_left), post.vec(tc.kappa_left + 1), r);
      if (auto miss = compare(k, eval(tc.kappa[r - 1]))) {
        miss->note = "kappa r=" + std::to_string(r);
        return miss;
      }
    }
  return std::nullopt;
}

void suite_transposition(Runner& run) {
  const auto& c = run.cfg();
  for (int n : range_of(c.n, 2, c.max_n)) {
    auto ms = range_of(c.m, 3, std::max(3, c.max_m));
    for (int m : ms)
      for (auto [i, j] : windows(c, m, ms.front(), 2)) {
        auto body = [&](const TransCase& tc, int lo, int hi) -> Outcome {
          if (c.mode == Mode::Symbolic)
            return check_trans(tc, symbolic_tuple<FR>(n, m), n, lo, hi,
                               [](const FR& f) { return f; });
          return run.at_points(n, m, [&](const FieldPoint& pt) {
            return check_trans(tc, point_tuple(pt), n, lo, hi,
                               [&](const FR& f) { return f.eval(pt); });
          });
        };
        for (int k = i; k < j; ++k)
          run.run(desc({{"n", n}, {"m", m}, {"i", i}, {"j", j}, {"k", k}}) + " first", [&] {
            TransCase tc{family_word(i, j, k, Family::First), full_action(n, m, i, j, k, Family::First)};
            if (k > i) {
              tc.kappa_left = k - 1;
              for (int r = 1; r <= n; ++r) tc.kappa.push_back(trans_kappa(n, i, j, k, r));
            }
            return body(tc, 1, m);
          });
        for (int k = i + 1; k <= j; ++k)
          run.run(desc({{"n", n}, {"m", m}, {"i", i}, {"j", j}, {"k", k}}) + " dual", [&] {
            TransCase tc{family_word(i, j, k, Family::Dual), full_action(n, m, i, j, k, Family::Dual)};
            if (k < j) {
              tc.kappa_left = k;
              for (int r = 1; r <= n; ++r) tc.kappa.push_back(trans_kappa_dual(n, i, j, k, r));
            }
            return body(tc, 1, m);
          });
        run.run(desc({{"n", n}, {"m", m}, {"i", i}, {"j", j}}) + " conjugate", [&] {
          TransCase tc{conjugate_word(i, j), symbolic_tuple<FR>(n, m)};
          for (int k = i + 1; k < j; ++k)
            for (int r = 1; r <= n; ++r) tc.closed.at(k, r) = trans_conjugate(n, i, j, k, r);
          return body(tc, i + 1, j - 1);
        });
      }
  }
}

void suite_sigma_identity(Runner& run) {
  const auto& c = run.cfg();
  for (int n : range_of(c.n, 2, c.max_n))
    for (int len : range_of(c.m, 2, std::max(2, c.max_m)))
      for (int r = 1; r <= n; ++r)
        run.run(desc({{"n", n}, {"i", 1}, {"j", len}, {"r", r}}),
                [&] { return expect(check_sigma_identity(n, 1, len, r), "identity fails"); });
}

void suite_partial_sums(Runner& run) {
  const auto& c = run.cfg();
  for (int n : range_of(c.n, 2, c.max_n))
    for (int j : range_of(c.m, 2, std::max(2, c.max_m)))
      for (int r = 1; r <= n; ++r)
        run.run(desc({{"n", n}, {"i", 1}, {"j", j}, {"r", r}}), [&]() -> Outcome {
          for (int k = 0; k < n - 1; ++k)
            if (auto miss = compare(s_up(n, 1, j, k, r), s_up_product(n, 1, j, k, r))) {
              miss->note = "S^" + std::to_string(k);
              return miss;
            }
          for (int k = 1; k <= n - 1; ++k)
            if (auto miss = compare(s_down(n, 1, j, k, r), s_down_product(n, 1, j, k, r))) {
              miss->note = "S_" + std::to_string(k);
              return miss;
            }
          if (auto miss = compare(s_up(n, 1, j, n - 1, r), s_full_product(n, 1, j, r))) {
            miss->note = "S^{n-1}";
            return miss;
          }
          return compare(s_down(n, 1, j, 0, r), s_full_product(n, 1, j, r));
        });
}

void suite_two_sums(Runner& run) {
  const auto& c = run.cfg();
  for (int n : range_of(c.n, 2, c.max_n))
    for (int k : range_of(c.m, 2, std::max(2, c.max_m)))
      for (int r = 1; r <= n; ++r)
        for (int d = 0; d <= 2 * (n - 1); ++d)
          for (int branch = 1; branch <= 2; ++branch) {
            if (branch == 1 && d > n - 1) continue;
            if (branch == 2 && d < n - 1) continue;
            run.run(desc({{"n", n}, {"i", 1}, {"k", k}, {"r", r}, {"m-q", d}, {"branch", branch}}),
                    [&] {
                      auto [l, rr] = two_sum_sides(n, 1, k, r, d, branch);
                      return compare(l, rr);
                    });
          }
}

void suite_omega_identity(Runner& run) {
  const auto& c = run.cfg();
  for (int n : range_of(c.n, 2, c.max_n))
    for (int j : range_of(c.m, 3, std::max(3, c.max_m)))
      for (int i = 1; i <= j - 2; ++i)
        for (int k = i + 1; k <= j - 1; ++k)
          for (int r = 1; r <= n; ++r)
            run.run(desc({{"n", n}, {"i", i}, {"j", j}, {"k", k}, {"r", r}}), [&] {
              auto [l, rr] = omega_identity_sides(n, i, j, k, r);
              return compare(l, rr);
            });
}

void suite_comb_tau(Runner& run) {
  const auto& c = run.cfg();
  for (int n : range_of(c.n, 2, c.max_n))
    for (int m : range_of(c.m, 1, c.max_m))
      for (int r = 1; r <= n; ++r)
        for (int k = 0; k <= m * (n - 1); ++k)
          run.run(desc({{"n", n}, {"m", m}, {"r", r}, {"k", k}}),
                  [&] { return compare(gen_tau(n, m, r, k), tau(n, 1, m, k, r)); });
}

void suite_comb_sigma(Runner& run) {
  const auto& c = run.cfg();
  for (int n : range_of(c.n, 2, c.max_n))
    for (int m : range_of(c.m, 1, c.max_m))
      for (int r = 1; r <= n; ++r)
        for (int k = 0; k <= m * (n - 1); ++k)
          run.run(desc({{"n", n}, {"m", m}, {"r", r}, {"k", k}}), [&]() -> Outcome {
            if (auto miss = compare(gen_sigma(n, m, r, k), sigma(n, 1, m, k, r))) {
              miss->note = "sigma";
              return miss;
            }
            if (auto miss = compare(gen_sigma_bar(n, m, r, k), sigma_bar(n, 1, m, k, r))) {
              miss->note = "sigma-bar";
              return miss;
            }
            return std::nullopt;
          });
}

Integer coefficient_sum(const Polynomial& p) {
  Integer s = 0;
  for (const auto& t : p.terms()) s += t.coeff;
  return s;
}

void suite_comb_omega(Runner& run) {
  const auto& c = run.cfg();
  for (int n : range_of(c.n, 2, c.max_n))
    for (int m : range_of(c.m, 2, std::max(2, c.max_m)))
      for (int r = 1; r <= n; ++r) {
        for (int cut = 1; cut < m; ++cut)
          run.run(desc({{"n", n}, {"m", m}, {"r", r}, {"cut", cut}}),
                  [&] { return compare(gen_omega(n, m, r, cut), omega(n, 1, m, cut, r)); });
        // the family set does not depend on the cut; the algebraic side must agree
        run.run(desc({{"n", n}, {"m", m}, {"r", r}}) + " cardinality", [&]() -> Outcome {
          const Integer count = enumerate_families(omega_class(n, m, r)).size();
          for (int cut = 1; cut < m; ++cut) {
            Integer a = coefficient_sum(omega(n, 1, m, cut, r));
            if (a != count)
              return Mismatch{a.str(), count.str(), "cut " + std::to_string(cut)};
          }
          return std::nullopt;
        });
      }
}

void suite_degree_lemma(Runner& run) {
  const auto& c = run.cfg();
  for (int n : range_of(c.n, 2, c.max_n))
    for (int m : range_of(c.m, 1, c.max_m))
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> S;
        for (int s = 1; s <= n; ++s)
          if (mask & (1u << (s - 1))) S.push_back(s);
        std::string sdesc;
        for (int s : S) sdesc += std::to_string(s);
        run.run(desc({{"n", n}, {"m", m}}) + " S=" + sdesc, [&]() -> Outcome {
          for (const auto& f : enumerate_from_sources(n, m, S)) {
            int want = degree_of_class(n, S, f.sinks());
            if (f.degree() % n != want)
              return Mismatch{std::to_string(f.degree() % n), std::to_string(want), f.key()};
          }
          return std::nullopt;
        });
      }
}

void suite_switch(Runner& run) {
  const auto& c = run.cfg();
  for (int n : range_of(c.n, 2, c.max_n))
    for (int m : range_of(c.m, 1, c.max_m))
      for (int r = 1; r <= n; ++r)
        for (int k = 0; k <= m * (n - 1); ++k)
          run.run(desc({{"n", n}, {"m", m}, {"r", r}, {"k", k}}), [&]() -> Outcome {
            auto conn = switch_connectivity(n, m, r, k);
            if (conn.connected()) return std::nullopt;
            return Mismatch{std::to_string(conn.reachable), std::to_string(conn.total),
                            "reachable / total"};
          });
}

void suite_divisibility(Runner& run) {
  run.run("n=2 m=4 s2*s3*s1*s2 entry (2,1)", [&]() -> Outcome {
    auto t = apply_word(symbolic_tuple<FR>(2, 4), parse_word("s2*s3*s1*s2"));
    Polynomial num = t.at(2, 1).expand().num();
    Polynomial q = parse_polynomial(q1_factor_text());
    if (q.size() != 15) return Mismatch{"", "", "factor does not have 15 terms"};
    if (divide_exact(num, q)) return std::nullopt;
    return Mismatch{show(num), show(q), "nonzero remainder"};
  });
}

void suite_loop_energy(Runner& run) {
  const auto& c = run.cfg();
  for (int n : range_of(c.n, 2, c.max_n))
    for (int m : range_of(c.m, 2, std::max(2, c.max_m)))
      for (int w = 0; w < c.words; ++w) {
        Permutation p(m);
        std::iota(p.begin(), p.end(), 1);
        std::shuffle(p.begin(), p.end(), run.rng());
        Word word = w % 2 ? reduced_word_rtl(p) : reduced_word(p);
        run.run(desc({{"n", n}, {"m", m}}) + " word " + word_to_string(word), [&]() -> Outcome {
          Permutation arr = word_to_permutation(word, m);
          auto check = [&](const auto& x) -> Outcome {
            auto y = apply_word(x, word);
            for (int i = 1; i <= m; ++i) {
              auto lhs = y.at(i, 1);
              auto rhs = x.at(arr[i - 1], 1);
              for (int r = 2; r <= n; ++r) {
                lhs = lhs * y.at(i, r);
                rhs = rhs * x.at(arr[i - 1], r);
              }
              if (auto miss = compare(lhs, rhs)) {
                miss->note = "position " + std::to_string(i);
                return miss;
              }
            }
            return std::nullopt;
          };
          if (c.mode == Mode::Symbolic) return check(symbolic_tuple<FR>(n, m));
          return run.at_points(n, m, [&](const FieldPoint& pt) { return check(point_tuple(pt)); });
        });
      }
}

const std::map<std::string, void (*)(Runner&), std::less<>>& registry() {
  static const std::map<std::string, void (*)(Runner&), std::less<>> r{
      {"involution", suite_involution},
      {"braid", suite_braid},
      {"oneshift", suite_oneshift},
      {"transposition", suite_transposition},
      {"sigma-identity", suite_sigma_identity},
      {"partial-sums", suite_partial_sums},
      {"two-sums", suite_two_sums},
      {"omega-identity", suite_omega_identity},
      {"comb-tau", suite_comb_tau},
      {"comb-sigma", suite_comb_sigma},
      {"comb-omega", suite_comb_omega},
      {"degree-lemma", suite_degree_lemma},
      {"switch-connectivity", suite_switch},
      {"divisibility-q1", suite_divisibility},
      {"loop-energy", suite_loop_energy},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "involution",     "braid",         "oneshift",       "transposition", "sigma-identity",
      "partial-sums",   "two-sums",      "omega-identity", "comb-tau",      "comb-sigma",
      "comb-omega",     "degree-lemma",  "switch-connectivity", "divisibility-q1", "loop-energy"};
  return names;
}

VerifyReport run_suite(std::string_view name, const VerifyConfig& cfg) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  if (cfg.mode == Mode::Modular && cfg.points < 1)
    throw std::invalid_argument("modular mode needs at least one point");
  if (cfg.n && *cfg.n < 2) throw std::invalid_argument("n must be at least 2");
  if (cfg.m && *cfg.m < 1) throw std::invalid_argument("m must be at least 1");
  auto t0 = Clock::now();
  Runner run(std::string(name), cfg);
  it->second(run);
  return run.finish(std::chrono::duration<double>(Clock::now() - t0).count());
}

std::vector<VerifyReport> run_all(const VerifyConfig& cfg) {
  std::vector<VerifyReport> out;
  for (const auto& s : suite_names()) out.push_back(run_suite(s, cfg));
  return out;
}

}  // namespace brm
