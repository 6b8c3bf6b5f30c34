#pragma once

// Slow reference implementations written straight from the definitions.
// They share no code with the library beyond the Polynomial/RationalFunction
// types, so agreement means something.

#include "brm/modular.hpp"
#include "brm/polynomial.hpp"
#include "brm/rational.hpp"

#include <vector>

namespace oracle {

using brm::Polynomial;
using brm::RationalFunction;

// Sum over weakly increasing index sequences i_1 <= .. <= i_k in [i, j] of
// x_{i_1}^{(r)} x_{i_2}^{(r-1)} ..., every index used at most n-1 times except
// `unlimited` (0 = none).
Polynomial index_sum(int n, int i, int j, long long k, long long r, int unlimited);

inline Polynomial tau(int n, int i, int j, long long k, long long r) {
  return index_sum(n, i, j, k, r, 0);
}
inline Polynomial sigma(int n, int i, int j, long long k, long long r) {
  return index_sum(n, i, j, k, r, i);
}
inline Polynomial sigma_bar(int n, int i, int j, long long k, long long r) {
  return index_sum(n, i, j, k, r, j);
}

// The defining sum over l of sigma (left) times sigma-bar (right).
Polynomial omega(int n, int i, int j, int cut, long long r);
// Terms of sigma_{(n-1)(j-i-1)+k} using x_j at most k times.
Polynomial p_fn(int n, int i, int j, long long k, long long r);

// Plain R-matrix, generic in the entry type.  Expanded rational functions
// swell quickly without a gcd, so longer words go through ModP points.
template <class T>
using VecOf = std::vector<T>;
template <class T>
using TupleOf = std::vector<VecOf<T>>;  // [vector][superscript-1]
using Vec = VecOf<RationalFunction>;
using Tuple = TupleOf<RationalFunction>;

Tuple symbolic(int n, int m);
TupleOf<brm::ModP> at_point(const brm::FieldPoint& pt);

// kappa_i(a, b) = sum_{j=i}^{i+n-1} prod_{k=i+1}^{j} b_k prod_{k=j+1}^{i+n-1} a_k
template <class T>
T kappa(const VecOf<T>& a, const VecOf<T>& b, int i) {
  const int n = static_cast<int>(a.size());
  auto at = [n](const VecOf<T>& v, int k) { return v[((k - 1) % n + n) % n]; };
  T sum = a[0] - a[0];
  for (int j = i; j <= i + n - 1; ++j) {
    T term = a[0] / a[0];
    for (int k = i + 1; k <= j; ++k) term = term * at(b, k);
    for (int k = j + 1; k <= i + n - 1; ++k) term = term * at(a, k);
    sum = sum + term;
  }
  return sum;
}

template <class T>
TupleOf<T> apply(TupleOf<T> t, const std::vector<int>& letters_first) {
  for (int s : letters_first) {
    const VecOf<T> a = t[s - 1], b = t[s];
    const int n = static_cast<int>(a.size());
    auto idx = [n](int k) { return ((k - 1) % n + n) % n; };
    VecOf<T> ap(n), bp(n);
    for (int i = 1; i <= n; ++i) {
      ap[i - 1] = a[idx(i - 1)] * kappa(a, b, i - 1) / kappa(a, b, i);
      bp[i - 1] = b[idx(i + 1)] * kappa(a, b, i + 1) / kappa(a, b, i);
    }
    t[s - 1] = bp;
    t[s] = ap;
  }
  return t;
}

}  // namespace oracle
