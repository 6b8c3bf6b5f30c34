#pragma once

// tau, sigma, sigma-bar, Omega and P as polynomials in the window x_i..x_j,
// the T_s / partial sum expressions, and checkers for the identities they
// satisfy.  Superscripts are arbitrary integers, reduced mod n here.
//
// Windows are 1-based and inclusive.  An empty window (j = i-1) is allowed for
// tau and sigma: the value is 1 at k = 0 and 0 otherwise.

#include "brm/polynomial.hpp"

#include <utility>

namespace brm {

// x_i^{(r)} x_i^{(r-1)} ... (len factors, superscripts decreasing from r)
Polynomial falling(int n, int i, long long r, long long len);
// x_i^{(r)} x_i^{(r+1)} ... (len factors, superscripts increasing from r)
Polynomial rising(int n, int i, long long r, long long len);

Polynomial tau(int n, int i, int j, long long k, long long r);
Polynomial sigma(int n, int i, int j, long long k, long long r);
Polynomial sigma_bar(int n, int i, int j, long long k, long long r);
// The defining sums, valid for every k (no shortcut above m(n-1)).
Polynomial sigma_def(int n, int i, int j, long long k, long long r);
Polynomial sigma_bar_def(int n, int i, int j, long long k, long long r);

// Omega_cut^{(r)}(x_i..x_j), i <= cut <= j-1.
Polynomial omega(int n, int i, int j, int cut, long long r);
// P_k^{(r)}(x_i..x_j), j > i, k >= 0.
Polynomial p_fn(int n, int i, int j, long long k, long long r);

// T_s, S^k = T_0+..+T_k and S_k = T_k+..+T_{n-1} on the window x_i..x_j, j > i.
Polynomial t_s(int n, int i, int j, int s, long long r);
Polynomial s_up(int n, int i, int j, int k, long long r);
Polynomial s_down(int n, int i, int j, int k, long long r);
// The product formulas claimed for S^k, S_k and S^{n-1} = S_0.
Polynomial s_up_product(int n, int i, int j, int k, long long r);
Polynomial s_down_product(int n, int i, int j, int k, long long r);
Polynomial s_full_product(int n, int i, int j, long long r);

bool check_sigma_identity(int n, int i, int j, long long r);
bool check_partial_sum_lemma(int n, int i, int j, long long r);

// Both sides of the two-sum identity on the window x_i..x_k with d = m - q.
// Branch 1 needs 0 <= d <= n-1, branch 2 needs n-1 <= d <= 2(n-1).  In branch
// 2 the superscript of P_gamma is r-k+i+gamma+1 unless minus_variant is set,
// which uses r-k+i-gamma+1 instead.
std::pair<Polynomial, Polynomial> two_sum_sides(int n, int i, int k, long long r, int d,
                                                int branch, bool minus_variant = false);
// Throws std::invalid_argument when q or m - q is out of range.
bool check_two_sum_lemma(int n, int i, int j, int k, long long r, int m, int q);

// (prod sigma) * Omega_{k-1} and the s-sum of Omega_k terms, i < k <= j-1.
std::pair<Polynomial, Polynomial> omega_identity_sides(int n, int i, int j, int k, long long r);
// One summand of the right hand side.
Polynomial omega_identity_term(int n, int i, int j, int k, long long r, int s);
bool check_omega_identity(int n, int i, int j, int k, long long r);

}  // namespace brm
