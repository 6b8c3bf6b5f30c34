#include "brm/cylnet.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>
#include <unordered_set>

namespace brm {

namespace {

void check_nm(int n, int m) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (m < 1) throw std::invalid_argument("m must be at least 1");
}

// floor-free residue of a wire index
int wire(long long w, int n) { return residue(w, n); }

}  // namespace

int HighwayPath::degree() const {
  return static_cast<int>(std::count(steps.begin(), steps.end(), Step::Through));
}

int HighwayPath::sink() const { return wire(source + degree() - 1, n); }

int HighwayPath::wire_after(int t) const {
  long long w = source;
  for (int s = 0; s < t; ++s)
    if (steps[s] == Step::Zigzag) --w;
  return wire(w, n);
}

Monomial HighwayPath::weight() const {
  Monomial out;
  long long w = source;
  for (int t = 1; t <= static_cast<int>(steps.size()); ++t) {
    if (steps[t - 1] == Step::Through)
      out = out * Monomial(Variable::make(t, w + t - 1, n));
    else
      --w;
  }
  return out;
}

std::string HighwayPath::step_string() const {
  std::string s;
  for (Step st : steps) s += st == Step::Through ? 'T' : 'Z';
  return s;
}

HighwayPath HighwayPath::parse(int n, int source, const std::string& steps) {
  HighwayPath p;
  p.n = n;
  p.m = static_cast<int>(steps.size());
  p.source = wire(source, n);
  for (char c : steps) {
    if (c == 'T' || c == 't') p.steps.push_back(Step::Through);
    else if (c == 'Z' || c == 'z') p.steps.push_back(Step::Zigzag);
    else throw std::invalid_argument("steps must be T or Z");
  }
  return p;
}

int PathFamily::degree() const {
  int d = 0;
  for (const auto& p : paths) d += p.degree();
  return d;
}

Monomial PathFamily::weight() const {
  Monomial w;
  for (const auto& p : paths) w = w * p.weight();
  return w;
}

std::vector<int> PathFamily::sources() const {
  std::vector<int> s;
  for (const auto& p : paths) s.push_back(p.source);
  return s;
}

std::vector<int> PathFamily::sinks() const {
  std::vector<int> s;
  for (const auto& p : paths) s.push_back(p.sink());
  std::sort(s.begin(), s.end());
  return s;
}

std::string PathFamily::key() const {
  std::string k;
  for (const auto& p : paths) k += std::to_string(p.source) + ":" + p.step_string() + ";";
  return k;
}

// Local rule: walk each path, record every edge and every vertex transition.
bool is_noncrossing(const PathFamily& f) {
  enum Dir { W, N, S, E };
  // (loop, wire, kind) where kind 0 = horizontal segment after the loop, 1 = vertical
  std::set<std::tuple<int, int, int>> edges;
  std::map<std::pair<int, int>, std::vector<std::pair<Dir, Dir>>> vertices;
  for (const auto& p : f.paths) {
    if (!edges.emplace(0, p.source, 0).second) return false;
    long long w = p.source;
    for (int t = 1; t <= static_cast<int>(p.steps.size()); ++t) {
      int cw = wire(w, p.n);
      if (p.steps[t - 1] == Step::Through) {
        vertices[{t, cw}].push_back({W, E});
      } else {
        int up = wire(w - 1, p.n);
        vertices[{t, cw}].push_back({W, N});
        if (!edges.emplace(t, cw, 1).second) return false;
        vertices[{t, up}].push_back({S, E});
        --w;
      }
      if (!edges.emplace(t, wire(w, p.n), 0).second) return false;
    }
  }
  for (const auto& [v, uses] : vertices) {
    if (uses.size() == 1) continue;
    if (uses.size() > 2) return false;
    bool kiss = (uses[0] == std::make_pair(W, N) && uses[1] == std::make_pair(S, E)) ||
                (uses[0] == std::make_pair(S, E) && uses[1] == std::make_pair(W, N));
    if (!kiss) return false;
  }
  return true;
}

FamilyClass tau_class(int n, int m, long long r, int k, DegreeMode mode) {
  check_nm(n, m);
  FamilyClass c;
  c.n = n;
  c.m = m;
  c.mode = mode;
  c.k = k;
  for (int s = 1; s <= n; ++s) {
    if (s != wire(r + 1, n)) c.sources.push_back(s);
    if (s != wire(r - k, n)) c.sinks.push_back(s);
  }
  return c;
}

FamilyClass omega_class(int n, int m, long long r) {
  FamilyClass c = tau_class(n, m, r, (m - 1) * (n - 1), DegreeMode::AtMost);
  c.sinks.clear();
  for (int s = 1; s <= n; ++s)
    if (s != wire(r + m - 1, n)) c.sinks.push_back(s);
  return c;
}

void check_guard(int n, int m) {
  check_nm(n, m);
  if (m * (n - 1) > kEnumerationGuard)
    throw GuardExceeded("enumeration guard exceeded: m(n-1) = " + std::to_string(m * (n - 1)) +
                        " > " + std::to_string(kEnumerationGuard));
}

namespace {

std::vector<HighwayPath> all_paths(int n, int m, int source) {
  std::vector<HighwayPath> out;
  out.reserve(std::size_t{1} << m);
  // bit t set means Through at loop t+1; counting down lists more Through first
  for (long long mask = (1LL << m) - 1; mask >= 0; --mask) {
    HighwayPath p;
    p.n = n;
    p.m = m;
    p.source = source;
    for (int t = 0; t < m; ++t)
      p.steps.push_back((mask >> (m - 1 - t)) & 1 ? Step::Through : Step::Zigzag);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<int> trajectory(const HighwayPath& p) {
  std::vector<int> w(p.steps.size() + 1);
  for (std::size_t t = 0; t < w.size(); ++t) w[t] = p.wire_after(static_cast<int>(t));
  return w;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t] == b[t]) return false;
  return true;
}

struct Search {
  std::vector<std::vector<HighwayPath>> cand;
  std::vector<std::vector<std::vector<int>>> traj;
  std::vector<std::size_t> pick;
  std::vector<PathFamily> out;
  int max_degree = 1 << 30;

  void run(std::size_t level, int degree) {
    if (degree > max_degree) return;
    if (level == cand.size()) {
      PathFamily f;
      for (std::size_t l = 0; l < cand.size(); ++l) f.paths.push_back(cand[l][pick[l]]);
      out.push_back(std::move(f));
      return;
    }
    for (std::size_t c = 0; c < cand[level].size(); ++c) {
      bool ok = true;
      for (std::size_t l = 0; l < level && ok; ++l)
        ok = disjoint(traj[level][c], traj[l][pick[l]]);
      if (!ok) continue;
      pick[level] = c;
      run(level + 1, degree + cand[level][c].degree());
    }
  }
};

std::vector<PathFamily> search(int n, int m, std::vector<int> sources,
                               const std::vector<int>* sinks, int max_degree) {
  check_guard(n, m);
  std::sort(sources.begin(), sources.end());
  if (std::adjacent_find(sources.begin(), sources.end()) != sources.end())
    throw std::invalid_argument("sources must be distinct");
  Search s;
  s.max_degree = max_degree;
  for (int src : sources) {
    if (src < 1 || src > n) throw std::invalid_argument("source outside 1..n");
    std::vector<HighwayPath> c;
    for (auto& p : all_paths(n, m, src))
      if (!sinks || std::find(sinks->begin(), sinks->end(), p.sink()) != sinks->end())
        c.push_back(std::move(p));
    std::vector<std::vector<int>> tr;
    for (const auto& p : c) tr.push_back(trajectory(p));
    s.cand.push_back(std::move(c));
    s.traj.push_back(std::move(tr));
  }
  s.pick.assign(sources.size(), 0);
  s.run(0, 0);
  return std::move(s.out);
}

}  // namespace

std::vector<PathFamily> enumerate_families(const FamilyClass& c) {
  if (c.sources.size() != c.sinks.size()) return {};
  auto all = search(c.n, c.m, c.sources, &c.sinks, c.k);
  std::vector<PathFamily> out;
  for (auto& f : all) {
    if (c.mode == DegreeMode::Exact && f.degree() != c.k) continue;
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<PathFamily> enumerate_from_sources(int n, int m, const std::vector<int>& sources) {
  return search(n, m, sources, nullptr, 1 << 30);
}

Monomial loop_product(int n, int vec) {
  Monomial out;
  for (int i = 1; i <= n; ++i) out = out * Monomial(Variable{vec, i});
  return out;
}

namespace {

Monomial power(const Monomial& m, int e) {
  Monomial out;
  for (int i = 0; i < e; ++i) out = out * m;
  return out;
}

void check_k(int n, int m, int k) {
  if (k < 0 || k > m * (n - 1)) throw std::invalid_argument("k outside 0..m(n-1)");
}

}  // namespace

Polynomial gen_tau(int n, int m, long long r, int k) {
  if (k > m * (n - 1)) return Polynomial();  // no family, and tau vanishes
  check_k(n, m, k);
  std::vector<Polynomial::Term> terms;
  for (const auto& f : enumerate_families(tau_class(n, m, r, k, DegreeMode::Exact)))
    terms.push_back({f.weight(), 1});
  return Polynomial::from_terms(std::move(terms));
}

namespace {

Polynomial gen_sigma_side(int n, int m, long long r, int k, int vec) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  Monomial loop = loop_product(n, vec);
  std::vector<Polynomial::Term> terms;
  for (const auto& f : enumerate_families(tau_class(n, m, r, k, DegreeMode::AtMost))) {
    int gap = k - f.degree();
    if (gap % n != 0) throw std::logic_error("family degree not congruent to k");
    terms.push_back({power(loop, gap / n) * f.weight(), 1});
  }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace

Polynomial gen_sigma(int n, int m, long long r, int k) { return gen_sigma_side(n, m, r, k, 1); }

Polynomial gen_sigma_bar(int n, int m, long long r, int k) {
  return gen_sigma_side(n, m, r, k, m);
}

OmegaWeight omega_weight(const PathFamily& f, long long r, int cut) {
  if (f.paths.empty()) throw std::invalid_argument("empty family");
  const int n = f.paths[0].n;
  const int m = f.paths[0].m;
  if (cut < 1 || cut > m - 1) throw std::invalid_argument("cut outside 1..m-1");
  std::vector<int> left_sinks;
  int d1 = 0;
  for (const auto& p : f.paths) {
    HighwayPath left = p;
    left.m = cut;
    left.steps.resize(cut);
    left_sinks.push_back(left.sink());
    d1 += left.degree();
  }
  int missing = 0;
  for (int s = 1; s <= n; ++s)
    if (std::find(left_sinks.begin(), left_sinks.end(), s) == left_sinks.end()) missing = s;
  if (missing == 0 || left_sinks.size() != static_cast<std::size_t>(n - 1))
    throw std::invalid_argument("family does not have n-1 paths with distinct cut sinks");
  OmegaWeight w;
  w.ell = residue(r + cut - 1 - missing, n) % n;  // 0..n-1
  const int d2 = f.degree() - d1;
  const int a = (n - 1) * (cut - 1) + w.ell - d1;
  const int b = (n - 1) * (m - cut) - w.ell - d2;
  if (a < 0 || b < 0 || a % n != 0 || b % n != 0)
    throw std::logic_error("cut degrees are not of the expected form");
  w.j1 = a / n;
  w.j2 = b / n;
  w.weight = power(loop_product(n, 1), w.j1) * f.weight() * power(loop_product(n, m), w.j2);
  return w;
}

Polynomial gen_omega(int n, int m, long long r, int cut) {
  if (cut < 1 || cut > m - 1) throw std::invalid_argument("cut outside 1..m-1");
  std::vector<Polynomial::Term> terms;
  for (const auto& f : enumerate_families(omega_class(n, m, r)))
    terms.push_back({omega_weight(f, r, cut).weight, 1});
  return Polynomial::from_terms(std::move(terms));
}

std::optional<PathFamily> apply_switch(const PathFamily& f, int path_id, int position) {
  if (path_id < 0 || path_id >= static_cast<int>(f.paths.size()))
    throw std::out_of_range("path id out of range");
  const auto& steps = f.paths[path_id].steps;
  if (position < 0 || position + 1 >= static_cast<int>(steps.size()))
    throw std::out_of_range("switch position out of range");
  if (steps[position] == steps[position + 1]) return std::nullopt;
  PathFamily g = f;
  std::swap(g.paths[path_id].steps[position], g.paths[path_id].steps[position + 1]);
  if (!is_noncrossing(g)) return std::nullopt;
  return g;
}

int degree_of_class(int n, const std::vector<int>& sources, const std::vector<int>& sinks) {
  if (sources.size() != sinks.size()) throw std::invalid_argument("|S| != |R|");
  long long d = static_cast<long long>(sources.size());
  for (int r : sinks) d += r;
  for (int s : sources) d -= s;
  return static_cast<int>(((d % n) + n) % n);
}

PathFamily initial_family(int n, int m, long long r, int k) {
  check_nm(n, m);
  check_k(n, m, k);
  const int ell = k / (n - 1);
  const int t = k % (n - 1);
  PathFamily f;
  for (int i = 1; i <= n - 1; ++i) {
    int through = i <= t ? ell + 1 : ell;
    HighwayPath p;
    p.n = n;
    p.m = m;
    p.source = wire(r - i + 1, n);
    for (int s = 0; s < m; ++s) p.steps.push_back(s < through ? Step::Through : Step::Zigzag);
    f.paths.push_back(std::move(p));
  }
  std::sort(f.paths.begin(), f.paths.end(),
            [](const HighwayPath& a, const HighwayPath& b) { return a.source < b.source; });
  return f;
}

Connectivity switch_connectivity(int n, int m, long long r, int k) {
  auto all = enumerate_families(tau_class(n, m, r, k, DegreeMode::Exact));
  Connectivity c;
  c.total = all.size();
  std::unordered_set<std::string> members;
  for (const auto& f : all) members.insert(f.key());
  PathFamily start = initial_family(n, m, r, k);
  if (!members.count(start.key())) return c;
  std::unordered_set<std::string> seen{start.key()};
  std::deque<PathFamily> queue{start};
  while (!queue.empty()) {
    PathFamily f = std::move(queue.front());
    queue.pop_front();
    for (int p = 0; p < static_cast<int>(f.paths.size()); ++p)
      for (int pos = 0; pos + 1 < m; ++pos) {
        auto g = apply_switch(f, p, pos);
        if (g && seen.insert(g->key()).second) queue.push_back(std::move(*g));
      }
  }
  for (const auto& key : seen) c.reachable += members.count(key);
  return c;
}

}  // namespace brm
