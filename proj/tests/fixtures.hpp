#pragma once

// Worked examples, transcribed once and frozen.  x[i,r] is x_i^{(r)}; in the
// two-vector example a_k = x[1,k] and b_k = x[2,k].

#include "brm/cylnet.hpp"
#include "brm/polynomial.hpp"
#include "brm/specialfn.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fixture {

// n = 4, a_2' after s_1
inline const char* kA2Prime =
    "x[1,1]*(x[1,2]*x[1,3]*x[1,4] + x[2,2]*x[1,3]*x[1,4] + x[2,2]*x[2,3]*x[1,4]"
    " + x[2,2]*x[2,3]*x[2,4])"
    "/(x[1,3]*x[1,4]*x[1,1] + x[2,3]*x[1,4]*x[1,1] + x[2,3]*x[2,4]*x[1,1] + x[2,3]*x[2,4]*x[2,1])";

// n = 4, window (x_1, x_2), k = 5, r = 3
inline const char* kTau5 =
    "x[1,3]*x[1,2]*x[1,1]*x[2,4]*x[2,3] + x[1,3]*x[1,2]*x[2,1]*x[2,4]*x[2,3]";
inline const char* kSigma5 =
    "x[1,3]*x[1,2]*x[1,1]*x[1,4]*x[1,3] + x[1,3]*x[1,2]*x[1,1]*x[1,4]*x[2,3]"
    " + x[1,3]*x[1,2]*x[1,1]*x[2,4]*x[2,3] + x[1,3]*x[1,2]*x[2,1]*x[2,4]*x[2,3]";
inline const char* kSigmaBar5 =
    "x[1,3]*x[1,2]*x[1,1]*x[2,4]*x[2,3] + x[1,3]*x[1,2]*x[2,1]*x[2,4]*x[2,3]"
    " + x[1,3]*x[2,2]*x[2,1]*x[2,4]*x[2,3] + x[2,3]*x[2,2]*x[2,1]*x[2,4]*x[2,3]";

// n = 3, m = 4, r = 3: the only family of degree 8
inline const char* kTau8Weight =
    "x[1,3]*x[1,2]*x[2,1]*x[2,3]*x[3,2]*x[3,1]*x[4,3]*x[4,2]";

// n = 3, m = 4, r = 3 Omega class: families P (degree 6) and Q (degree 3)
inline brm::PathFamily family_p() {
  return {{brm::HighwayPath::parse(3, 2, "TTZT"), brm::HighwayPath::parse(3, 3, "TTTZ")}};
}
inline brm::PathFamily family_q() {
  return {{brm::HighwayPath::parse(3, 2, "TZZZ"), brm::HighwayPath::parse(3, 3, "TTZZ")}};
}
inline const char* kQOmega2Weight = "x[1,3]*x[1,2]*x[2,1]*x[4,3]*x[4,2]*x[4,1]";

// sigma_{(n-1)(b-a)}^{(r)}(x_a..x_b)
inline brm::Polynomial sig(int n, int a, int b, long long r) {
  return brm::sigma(n, a, b, static_cast<long long>(n - 1) * (b - a), r);
}
inline brm::Polynomial x(int i, long long r, int n = 4) { return brm::Variable::make(i, r, n); }

// Partial sums, r = n = 4, i = 1, j = 3: T_0..T_3 as displayed
inline std::vector<brm::Polynomial> partial_sum_terms() {
  const int n = 4;
  return {
      x(3, 2) * x(3, 3) * x(3, 4) * sig(n, 1, 2, 3) * sig(n, 1, 3, 4) * sig(n, 1, 3, 1),
      x(1, 3) * x(3, 3) * x(3, 4) * sig(n, 1, 3, 2) * sig(n, 1, 2, 4) * sig(n, 1, 3, 1),
      x(1, 4) * x(1, 3) * x(3, 4) * sig(n, 1, 3, 2) * sig(n, 1, 3, 3) * sig(n, 1, 2, 1),
      x(1, 1) * x(1, 4) * x(1, 3) * sig(n, 1, 2, 2) * sig(n, 1, 3, 3) * sig(n, 1, 3, 4),
  };
}

// The six displayed partial sums and their product forms, then the full sum.
inline std::vector<std::pair<brm::Polynomial, brm::Polynomial>> partial_sum_claims() {
  const int n = 4;
  auto T = partial_sum_terms();
  auto P = [&](long long k, long long r) { return brm::p_fn(n, 1, 3, k, r); };
  return {
      {T[0], x(3, 2) * x(3, 3) * x(3, 4) * P(0, 3) * sig(n, 1, 3, 4) * sig(n, 1, 3, 1)},
      {T[0] + T[1], x(3, 3) * x(3, 4) * sig(n, 1, 3, 3) * P(1, 4) * sig(n, 1, 3, 1)},
      {T[0] + T[1] + T[2], x(3, 4) * sig(n, 1, 3, 3) * sig(n, 1, 3, 4) * P(2, 1)},
      {T[3], x(1, 1) * x(1, 4) * x(1, 3) * P(0, 2) * sig(n, 1, 3, 3) * sig(n, 1, 3, 4)},
      {T[2] + T[3], x(1, 4) * x(1, 3) * sig(n, 1, 3, 1) * P(1, 2) * sig(n, 1, 3, 3)},
      {T[1] + T[2] + T[3], x(1, 3) * sig(n, 1, 3, 4) * sig(n, 1, 3, 1) * P(2, 2)},
      {T[0] + T[1] + T[2] + T[3], sig(n, 1, 3, 3) * sig(n, 1, 3, 4) * sig(n, 1, 3, 1)},
  };
}

// Omega identity, i = 1, j = r = n = 4, k = 3: left side and the four terms
inline brm::Polynomial omega_example_lhs() {
  const int n = 4;
  return sig(n, 1, 3, 3) * sig(n, 1, 3, 4) * sig(n, 1, 3, 1) * brm::omega(n, 1, 4, 2, 2);
}
inline std::vector<brm::Polynomial> omega_example_terms() {
  const int n = 4;
  return {
      x(3, 2) * x(3, 3) * x(3, 4) * sig(n, 1, 4, 2) * sig(n, 1, 2, 3) * sig(n, 1, 3, 4) * sig(n, 1, 3, 1),
      x(4, 2) * x(3, 3) * x(3, 4) * sig(n, 1, 3, 2) * sig(n, 1, 4, 3) * sig(n, 1, 2, 4) * sig(n, 1, 3, 1),
      x(4, 2) * x(4, 3) * x(3, 4) * sig(n, 1, 3, 2) * sig(n, 1, 3, 3) * sig(n, 1, 4, 4) * sig(n, 1, 2, 1),
      x(4, 2) * x(4, 3) * x(4, 4) * sig(n, 1, 2, 2) * sig(n, 1, 3, 3) * sig(n, 1, 3, 4) * sig(n, 1, 4, 1),
  };
}

// Numerator factor of s2*s3*s1*s2 (x_2^{(1)}) for n = 2, m = 4 is brm::q1_factor_text().

}  // namespace fixture
