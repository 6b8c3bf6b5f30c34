#pragma once

// kappa, the R-matrix eta on pairs of n-vectors, and the induced action of the
// symmetric group on m-tuples.  Everything is templated over the entry type:
// FactoredRational for exact work, RationalFunction for small cases, ModP for
// evaluation at a point.  Entry types need +, *, / and a sum_of overload.

#include "brm/factored.hpp"
#include "brm/modular.hpp"
#include "brm/rational.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace brm {

template <class T>
T sum_of(std::span<const T> terms) {
  T r = terms.empty() ? T(0) : terms[0];
  for (std::size_t i = 1; i < terms.size(); ++i) r = r + terms[i];
  return r;
}

inline ModP sum_of(std::span<const ModP> terms) {
  ModP r = terms.empty() ? ModP() : terms[0];
  for (std::size_t i = 1; i < terms.size(); ++i) r = r + terms[i];
  return r;
}

template <class T>
class Tuple {
 public:
  Tuple(int n, int m) : n_(n), m_(m) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    data_.resize(static_cast<std::size_t>(n) * m);
  }

  int n() const { return n_; }
  int m() const { return m_; }

  // 1-based vector index, superscript taken mod n.
  T& at(int i, long long r) { return data_[index(i, r)]; }
  const T& at(int i, long long r) const { return data_[index(i, r)]; }

  std::span<const T> vec(int i) const {
    return {data_.data() + index(i, 1), static_cast<std::size_t>(n_)};
  }
  void set_vec(int i, const std::vector<T>& v) {
    for (int r = 1; r <= n_; ++r) at(i, r) = v[r - 1];
  }

 private:
  std::size_t index(int i, long long r) const {
    if (i < 1 || i > m_) throw std::out_of_range("vector index " + std::to_string(i));
    return static_cast<std::size_t>(i - 1) * n_ + (residue(r, n_) - 1);
  }
  int n_, m_;
  std::vector<T> data_;
};

// entry(i, r) = x_i^{(r)}
template <class T>
Tuple<T> symbolic_tuple(int n, int m) {
  Tuple<T> t(n, m);
  for (int i = 1; i <= m; ++i)
    for (int r = 1; r <= n; ++r) t.at(i, r) = T(Variable{i, r});
  return t;
}

Tuple<ModP> point_tuple(const FieldPoint& pt);

template <class T>
T kappa(std::span<const T> a, std::span<const T> b, long long i) {
  const int n = static_cast<int>(a.size());
  if (n < 2 || b.size() != a.size()) throw std::invalid_argument("kappa: bad vector length");
  auto A = [&](long long k) -> const T& { return a[residue(k, n) - 1]; };
  auto B = [&](long long k) -> const T& { return b[residue(k, n) - 1]; };
  std::vector<T> terms;
  terms.reserve(n);
  for (long long j = i; j <= i + n - 1; ++j) {
    // every term has n-1 >= 1 factors
    T t = j > i ? B(i + 1) : A(i + 1);
    for (long long k = i + 2; k <= j; ++k) t = t * B(k);
    for (long long k = std::max(j + 1, i + 2); k <= i + n - 1; ++k) t = t * A(k);
    terms.push_back(std::move(t));
  }
  return sum_of(std::span<const T>(terms));
}

// eta(a, b) = (b', a')
template <class T>
std::pair<std::vector<T>, std::vector<T>> eta(std::span<const T> a, std::span<const T> b) {
  const int n = static_cast<int>(a.size());
  std::vector<T> k;
  k.reserve(n);
  for (int i = 1; i <= n; ++i) k.push_back(kappa(a, b, i));
  auto K = [&](long long i) -> const T& { return k[residue(i, n) - 1]; };
  std::vector<T> ap(n), bp(n);
  for (int i = 1; i <= n; ++i) {
    ap[i - 1] = a[residue(i - 1, n) - 1] * K(i - 1) / K(i);
    bp[i - 1] = b[residue(i + 1, n) - 1] * K(i + 1) / K(i);
  }
  return {std::move(bp), std::move(ap)};
}

template <class T>
Tuple<T> apply_generator(const Tuple<T>& t, int i) {
  if (i < 1 || i >= t.m())
    throw std::out_of_range("generator index " + std::to_string(i) + " out of range");
  auto [bp, ap] = eta(t.vec(i), t.vec(i + 1));
  Tuple<T> r = t;
  r.set_vec(i, bp);
  r.set_vec(i + 1, ap);
  return r;
}

using Word = std::vector<int>;

// Letters act leftmost first.
template <class T>
Tuple<T> apply_word(Tuple<T> t, const Word& w) {
  for (int letter : w) t = apply_generator(t, letter);
  return t;
}

// Permutations in one-line notation, values 1..m.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p);
// Arrangement obtained by applying the swaps of w to 1..m.
Permutation word_to_permutation(const Word& w, int m);
// Left-to-right bubble sort; length equals the inversion count.
Word reduced_word(const Permutation& p);
// Right-to-left bubble sort, a second reduced word for the same permutation.
Word reduced_word_rtl(const Permutation& p);
int inversions(const Permutation& p);

template <class T>
Tuple<T> apply_perm(const Tuple<T>& t, const Permutation& p) {
  if (static_cast<int>(p.size()) != t.m() || !is_permutation(p))
    throw std::invalid_argument("not a permutation of 1..m");
  return apply_word(t, reduced_word(p));
}

/// Parses "s2*s3*s1*s2" or "[2,3,1,2]".  By default the rightmost generator
/// acts first, so the returned word is the reversed sequence of letters; with
/// letters_first the letters are returned in the written order.
Word parse_word(std::string_view text, bool letters_first = false);
std::string word_to_string(const Word& w);  // composition order, "s2*s3*s1*s2"

}  // namespace brm
