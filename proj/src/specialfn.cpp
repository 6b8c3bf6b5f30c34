#include "brm/specialfn.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

namespace brm {

namespace {

void check_n(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
}

void check_window(int i, int j) {
  if (i < 1 || j < i - 1) throw std::invalid_argument("bad window");
}

Polynomial var(int n, int i, long long r) { return Polynomial(Variable::make(i, r, n)); }

// memo for tau / sigma / sigma-bar, keyed by (kind, n, i, j, k, r mod n)
using Key = std::tuple<char, int, int, int, long long, int>;

struct Memo {
  std::mutex mu;
  std::map<Key, Polynomial> values;
};

Memo& memo() {
  static Memo m;
  return m;
}

template <class F>
Polynomial cached(char kind, int n, int i, int j, long long k, long long r, F compute) {
  Key key{kind, n, i, j, k, residue(r, n)};
  {
    std::lock_guard lock(memo().mu);
    auto it = memo().values.find(key);
    if (it != memo().values.end()) return it->second;
  }
  Polynomial v = compute();
  std::lock_guard lock(memo().mu);
  memo().values.emplace(key, v);
  return v;
}

}  // namespace

Polynomial falling(int n, int i, long long r, long long len) {
  Monomial m;
  for (long long s = 0; s < len; ++s) m = m * Monomial(Variable::make(i, r - s, n));
  return Polynomial(m);
}

Polynomial rising(int n, int i, long long r, long long len) {
  Monomial m;
  for (long long s = 0; s < len; ++s) m = m * Monomial(Variable::make(i, r + s, n));
  return Polynomial(m);
}

// Recursion on how often the last vector is used: the t trailing factors
// carry superscripts r-k+t, ..., r-k+1.
Polynomial tau(int n, int i, int j, long long k, long long r) {
  check_n(n);
  check_window(i, j);
  const long long len = j - i + 1;
  if (k < 0 || k > len * (n - 1)) return {};
  if (k == 0) return Polynomial(1);
  if (len == 0) return {};
  return cached('t', n, i, j, k, r, [&] {
    Polynomial out;
    for (long long t = 0; t <= std::min<long long>(k, n - 1); ++t) {
      Polynomial head = tau(n, i, j - 1, k - t, r);
      if (head.is_zero()) continue;
      out += head * rising(n, j, r - k + 1, t);
    }
    return out;
  });
}

Polynomial sigma_def(int n, int i, int j, long long k, long long r) {
  check_n(n);
  check_window(i, j);
  if (k < 0) return {};
  if (j < i) return k == 0 ? Polynomial(1) : Polynomial();
  Polynomial out;
  for (long long t = 0; t <= k; ++t) {
    Polynomial rest = tau(n, i + 1, j, k - t, r - t);
    if (!rest.is_zero()) out += falling(n, i, r, t) * rest;
  }
  return out;
}

Polynomial sigma_bar_def(int n, int i, int j, long long k, long long r) {
  check_n(n);
  check_window(i, j);
  if (k < 0) return {};
  if (j < i) return k == 0 ? Polynomial(1) : Polynomial();
  Polynomial out;
  for (long long t = 0; t <= k; ++t) {
    Polynomial rest = tau(n, i, j - 1, k - t, r);
    if (!rest.is_zero()) out += rest * rising(n, j, r - k + 1, t);
  }
  return out;
}

Polynomial sigma(int n, int i, int j, long long k, long long r) {
  check_n(n);
  check_window(i, j);
  if (k < 0) return {};
  if (j < i) return k == 0 ? Polynomial(1) : Polynomial();
  const long long top = static_cast<long long>(j - i + 1) * (n - 1);
  return cached('s', n, i, j, k, r, [&] {
    if (k <= top) return sigma_def(n, i, j, k, r);
    const long long e = k - top;
    return falling(n, i, r, e) * sigma(n, i, j, top, r - e);
  });
}

Polynomial sigma_bar(int n, int i, int j, long long k, long long r) {
  check_n(n);
  check_window(i, j);
  if (k < 0) return {};
  if (j < i) return k == 0 ? Polynomial(1) : Polynomial();
  const long long top = static_cast<long long>(j - i + 1) * (n - 1);
  const long long m = j - i + 1;
  return cached('b', n, i, j, k, r, [&] {
    if (k <= top) return sigma_bar_def(n, i, j, k, r);
    const long long e = k - top;
    return sigma_bar(n, i, j, top, r) * falling(n, j, r + m, e);
  });
}

Polynomial omega(int n, int i, int j, int cut, long long r) {
  check_n(n);
  if (i < 1 || cut < i || cut > j - 1)
    throw std::invalid_argument("Omega: cut " + std::to_string(cut) + " outside [" +
                                std::to_string(i) + ", " + std::to_string(j - 1) + "]");
  Polynomial out;
  for (int l = 0; l <= n - 1; ++l) {
    Polynomial left = sigma(n, i, cut, static_cast<long long>(n - 1) * (cut - i) + l, r);
    if (left.is_zero()) continue;
    Polynomial right =
        sigma_bar(n, cut + 1, j, static_cast<long long>(n - 1) * (j - cut) - l, r + cut - i - l);
    if (!right.is_zero()) out += left * right;
  }
  return out;
}

Polynomial p_fn(int n, int i, int j, long long k, long long r) {
  check_n(n);
  if (i < 1 || j <= i) throw std::invalid_argument("P needs j > i");
  if (k < 0) throw std::invalid_argument("P needs k >= 0");
  Polynomial out;
  for (long long t = 0; t <= k; ++t) {
    Polynomial mid = sigma(n, i, j - 1, static_cast<long long>(n - 1) * (j - i - 1), r - t);
    out += falling(n, i, r, t) * mid * falling(n, j, r - t + j - i - 1, k - t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// partial sums

namespace {

void check_ts(int n, int i, int j, int s) {
  check_n(n);
  if (i < 1 || j <= i) throw std::invalid_argument("T_s needs j > i");
  if (s < 0 || s > n - 1) throw std::invalid_argument("index outside 0..n-1");
}

// sigma_{(n-1)(j-i)}^{(r-j+i+t)}(x_i..x_j)
Polynomial big_sigma(int n, int i, int j, long long r, long long t) {
  return sigma(n, i, j, static_cast<long long>(n - 1) * (j - i), r - j + i + t);
}

Polynomial big_sigma_range(int n, int i, int j, long long r, long long from, long long to) {
  Polynomial out(1);
  for (long long t = from; t <= to; ++t) out *= big_sigma(n, i, j, r, t);
  return out;
}

// prod_{t=from}^{to} x_j^{(t+1)}
Polynomial xj_shift(int n, int j, long long from, long long to) {
  return rising(n, j, from + 1, std::max<long long>(0, to - from + 1));
}

}  // namespace

Polynomial t_s(int n, int i, int j, int s, long long r) {
  check_ts(n, i, j, s);
  Polynomial out = xj_shift(n, j, r + s + 1, r + n - 1);
  out *= big_sigma_range(n, i, j, r, s + 2, s + n - 1);
  out *= sigma(n, i, j - 1, static_cast<long long>(n - 1) * (j - i - 1), r - j + i + s + 1);
  out *= rising(n, i, r - j + i + 1, s);
  return out;
}

Polynomial s_up(int n, int i, int j, int k, long long r) {
  check_ts(n, i, j, k);
  Polynomial out;
  for (int s = 0; s <= k; ++s) out += t_s(n, i, j, s, r);
  return out;
}

Polynomial s_down(int n, int i, int j, int k, long long r) {
  check_ts(n, i, j, k);
  Polynomial out;
  for (int s = k; s <= n - 1; ++s) out += t_s(n, i, j, s, r);
  return out;
}

Polynomial s_up_product(int n, int i, int j, int k, long long r) {
  check_ts(n, i, j, k);
  if (k >= n - 1) throw std::invalid_argument("S^k product form needs k < n-1");
  Polynomial out = xj_shift(n, j, r + k + 1, r + n - 1);
  out *= big_sigma_range(n, i, j, r, 1, k);
  out *= p_fn(n, i, j, k, r - j + i + k + 1);
  out *= big_sigma_range(n, i, j, r, k + 2, n - 1);
  return out;
}

Polynomial s_down_product(int n, int i, int j, int k, long long r) {
  check_ts(n, i, j, k);
  if (k <= 0) throw std::invalid_argument("S_k product form needs k > 0");
  Polynomial out = rising(n, i, r - j + i + 1, k);
  out *= big_sigma_range(n, i, j, r, k + 1, n - 1);
  out *= p_fn(n, i, j, n - k - 1, r - j + i);
  out *= big_sigma_range(n, i, j, r, 1, k - 1);
  return out;
}

Polynomial s_full_product(int n, int i, int j, long long r) {
  check_ts(n, i, j, 0);
  return big_sigma_range(n, i, j, r, 1, n - 1);
}

bool check_sigma_identity(int n, int i, int j, long long r) {
  check_n(n);
  if (i < 1 || j <= i) throw std::invalid_argument("sigma identity needs j > i");
  const long long full = static_cast<long long>(n - 1) * (j - i);
  const long long part = static_cast<long long>(n - 1) * (j - i - 1);
  Polynomial rhs, rhs_bar;
  for (int k = 0; k <= n - 1; ++k) {
    Polynomial tail = falling(n, j, r - k + j - i - 1, n - k - 1);
    rhs += falling(n, i, r, k) * sigma(n, i, j - 1, part, r - k) * tail;
    rhs_bar += falling(n, i, r, k) * sigma_bar(n, i + 1, j, part, r - k) * tail;
  }
  return rhs == sigma(n, i, j, full, r) && rhs_bar == sigma_bar(n, i, j, full, r);
}

bool check_partial_sum_lemma(int n, int i, int j, long long r) {
  for (int k = 0; k < n - 1; ++k)
    if (s_up(n, i, j, k, r) != s_up_product(n, i, j, k, r)) return false;
  for (int k = 1; k <= n - 1; ++k)
    if (s_down(n, i, j, k, r) != s_down_product(n, i, j, k, r)) return false;
  Polynomial full = s_full_product(n, i, j, r);
  return s_up(n, i, j, n - 1, r) == full && s_down(n, i, j, 0, r) == full;
}

// ---------------------------------------------------------------------------
// two sums

std::pair<Polynomial, Polynomial> two_sum_sides(int n, int i, int k, long long r, int d,
                                                int branch, bool minus_variant) {
  check_n(n);
  if (i < 1 || k <= i) throw std::invalid_argument("two-sum identity needs i < k");
  if (branch == 1 && (d < 0 || d > n - 1))
    throw std::invalid_argument("branch 1 needs 0 <= m-q <= n-1");
  if (branch == 2 && (d < n - 1 || d > 2 * (n - 1)))
    throw std::invalid_argument("branch 2 needs n-1 <= m-q <= 2(n-1)");
  if (branch != 1 && branch != 2) throw std::invalid_argument("branch must be 1 or 2");

  const long long base = r - k + i;
  Polynomial prod = big_sigma_range(n, i, k, r + 0, 1, n - 1);  // sigma^{(r-k+i+t)}
  const int gamma = 2 * (n - 1) - d;

  Polynomial lhs;
  if (branch == 1) {
    lhs = prod * p_fn(n, i, k, d, base);
  } else {
    // prod_{alpha=0}^{d-n} x_i^{(base-alpha)}, prod_{beta=n}^{d} x_k^{(r-beta)}
    Polynomial xi = falling(n, i, base, d - n + 1);
    Polynomial xk = falling(n, k, r - n, d - n + 1);
    long long sup = minus_variant ? base - gamma + 1 : base + gamma + 1;
    lhs = prod * xi * xk * p_fn(n, i, k, gamma, sup);
  }

  const int s_lo = branch == 1 ? (n - 1) - d : 0;
  const int s_hi = branch == 1 ? n - 1 : gamma;
  Polynomial sum;
  for (int s = s_lo; s <= s_hi; ++s) {
    Polynomial term = xj_shift(n, k, r + s + 1, r + n - 1);
    term *= big_sigma_range(n, i, k, r, s + 2, s + n - 1);
    term *= falling(n, i, base + s, s + d - n + 1);
    term *= sigma(n, i, k - 1, static_cast<long long>(n - 1) * (k - i - 1), base + s + 1);
    sum += term;
  }
  Polynomial rhs = big_sigma(n, i, k, r, -(d + 1)) * sum;
  return {lhs, rhs};
}

bool check_two_sum_lemma(int n, int i, int j, int k, long long r, int m, int q) {
  check_n(n);
  if (q < 0 || q > (n - 1) * (j - k + 1))
    throw std::invalid_argument("q outside 0..(n-1)(j-k+1)");
  const int d = m - q;
  if (d < 0 || d > 2 * (n - 1)) throw std::invalid_argument("m-q outside both branches");
  bool ok = true;
  if (d <= n - 1) {
    auto [l, rr] = two_sum_sides(n, i, k, r, d, 1);
    ok = ok && l == rr;
  }
  if (d >= n - 1) {
    auto [l, rr] = two_sum_sides(n, i, k, r, d, 2);
    ok = ok && l == rr;
  }
  return ok;
}

// ---------------------------------------------------------------------------
// Omega identity

Polynomial omega_identity_term(int n, int i, int j, int k, long long r, int s) {
  check_n(n);
  if (!(i < k && k <= j - 1)) throw std::invalid_argument("Omega identity needs i < k <= j-1");
  const long long base = r - k + i;
  // prod_{t=r+1}^{r+s} x_j^{(t+j-k)}
  Polynomial term = rising(n, j, r + 1 + j - k, s);
  term *= xj_shift(n, k, r + s + 1, r + n - 1);
  term *= big_sigma_range(n, i, k, r, s + 2, s + n - 1);
  term *= omega(n, i, j, k, base + s);
  term *= sigma(n, i, k - 1, static_cast<long long>(n - 1) * (k - i - 1), base + s + 1);
  return term;
}

std::pair<Polynomial, Polynomial> omega_identity_sides(int n, int i, int j, int k, long long r) {
  check_n(n);
  if (!(i < k && k <= j - 1)) throw std::invalid_argument("Omega identity needs i < k <= j-1");
  Polynomial lhs = big_sigma_range(n, i, k, r, 1, n - 1) * omega(n, i, j, k - 1, r - k + i);
  Polynomial rhs;
  for (int s = 0; s <= n - 1; ++s) rhs += omega_identity_term(n, i, j, k, r, s);
  return {lhs, rhs};
}

bool check_omega_identity(int n, int i, int j, int k, long long r) {
  auto [l, rr] = omega_identity_sides(n, i, j, k, r);
  return l == rr;
}

}  // namespace brm
