#pragma once

// Highway paths on the cylindric network with n wires and m loops.
//
// A path is a source wire and one step per loop.  Through at loop t on wire w
// picks up x_t^{(w+t-1)} and stays on w; Zigzag moves up to wire w-1 (mod n).
// The sink label is source + degree - 1 (mod n).  Families are noncrossing
// when they share no edge and the only shared vertices are corner kisses
// (one path turning west->north where another turns south->east).

#include "brm/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace brm {

enum class Step : unsigned char { Through, Zigzag };

struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kEnumerationGuard = 24;  // m(n-1)

struct HighwayPath {
  int n = 2;
  int m = 1;
  int source = 1;
  std::vector<Step> steps;

  int degree() const;
  int sink() const;
  int wire_after(int t) const;  // wire on the segment after loop t; t = 0 is the source
  Monomial weight() const;
  std::string step_string() const;  // "TZZ"

  static HighwayPath parse(int n, int source, const std::string& steps);
  friend bool operator==(const HighwayPath&, const HighwayPath&) = default;
};

struct PathFamily {
  std::vector<HighwayPath> paths;  // kept sorted by source

  int degree() const;
  Monomial weight() const;
  std::vector<int> sources() const;
  std::vector<int> sinks() const;  // sorted
  std::string key() const;
  friend bool operator==(const PathFamily&, const PathFamily&) = default;
};

bool is_noncrossing(const PathFamily& f);

enum class DegreeMode { Exact, AtMost };

struct FamilyClass {
  int n = 2, m = 1;
  std::vector<int> sources;
  std::vector<int> sinks;
  DegreeMode mode = DegreeMode::Exact;
  int k = 0;
};

// Sources [n] minus {r+1}, sinks [n] minus {r-k}.
FamilyClass tau_class(int n, int m, long long r, int k, DegreeMode mode);
// Sources [n] minus {r+1}, sinks [n] minus {r+m-1}, degree <= (m-1)(n-1).
FamilyClass omega_class(int n, int m, long long r);

void check_guard(int n, int m);

// Deterministic order.  Throws GuardExceeded when m(n-1) > 24.
std::vector<PathFamily> enumerate_families(const FamilyClass& c);
// All noncrossing families with the given sources and any sinks.
std::vector<PathFamily> enumerate_from_sources(int n, int m, const std::vector<int>& sources);

Monomial loop_product(int n, int vec);  // prod_{i=1}^{n} x_vec^{(i)}

Polynomial gen_tau(int n, int m, long long r, int k);
Polynomial gen_sigma(int n, int m, long long r, int k);
Polynomial gen_sigma_bar(int n, int m, long long r, int k);

struct OmegaWeight {
  int ell = 0;
  int j1 = 0;
  int j2 = 0;
  Monomial weight;
};
OmegaWeight omega_weight(const PathFamily& f, long long r, int cut);
Polynomial gen_omega(int n, int m, long long r, int cut);

// Swap steps position and position+1 of one path (0-based).  Throws for an
// out of range path or position; returns nothing when the pair is not a
// Through/Zigzag pair or the result crosses.
std::optional<PathFamily> apply_switch(const PathFamily& f, int path_id, int position);

// Common degree residue of families S -> R.
int degree_of_class(int n, const std::vector<int>& sources, const std::vector<int>& sinks);

// The family with the lowest indices in the exact-degree tau class.
PathFamily initial_family(int n, int m, long long r, int k);

struct Connectivity {
  std::size_t reachable = 0;
  std::size_t total = 0;
  bool connected() const { return reachable == total; }
};
// Breadth first search over allowed switches from the initial family.
Connectivity switch_connectivity(int n, int m, long long r, int k);

}  // namespace brm
