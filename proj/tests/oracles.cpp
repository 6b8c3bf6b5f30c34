#include "oracles.hpp"

#include <functional>

namespace oracle {

using brm::Monomial;
using brm::Variable;

Polynomial index_sum(int n, int i, int j, long long k, long long r, int unlimited) {
  if (k < 0) return Polynomial();
  if (j < i) return k == 0 ? Polynomial(1) : Polynomial();
  std::vector<Polynomial::Term> terms;
  std::vector<int> seq;
  std::function<void(int, int)> rec = [&](int from, int used) {
    if (static_cast<long long>(seq.size()) == k) {
      Monomial mono;
      for (std::size_t t = 0; t < seq.size(); ++t)
        mono = mono * Monomial(Variable::make(seq[t], r - static_cast<long long>(t), n));
      terms.push_back({mono, 1});
      return;
    }
    for (int idx = from; idx <= j; ++idx) {
      int u = idx == from ? used : 0;
      if (idx != unlimited && u >= n - 1) continue;
      seq.push_back(idx);
      rec(idx, u + 1);
      seq.pop_back();
    }
  };
  rec(i, 0);
  return Polynomial::from_terms(std::move(terms));
}

Polynomial omega(int n, int i, int j, int cut, long long r) {
  Polynomial out;
  for (int l = 0; l <= n - 1; ++l)
    out += sigma(n, i, cut, static_cast<long long>(n - 1) * (cut - i) + l, r) *
           sigma_bar(n, cut + 1, j, static_cast<long long>(n - 1) * (j - cut) - l, r + cut - i - l);
  return out;
}

Polynomial p_fn(int n, int i, int j, long long k, long long r) {
  Polynomial s = sigma(n, i, j, static_cast<long long>(n - 1) * (j - i - 1) + k, r);
  std::vector<Polynomial::Term> keep;
  for (const auto& t : s.terms()) {
    unsigned uses = 0;
    for (const auto& [v, e] : t.mono.factors())
      if (v.vec == j) uses += e;
    if (uses <= k) keep.push_back(t);
  }
  return Polynomial::from_terms(std::move(keep));
}

Tuple symbolic(int n, int m) {
  Tuple t(m, Vec(n));
  for (int i = 0; i < m; ++i)
    for (int r = 0; r < n; ++r) t[i][r] = RationalFunction(Variable{i + 1, r + 1});
  return t;
}

TupleOf<brm::ModP> at_point(const brm::FieldPoint& pt) {
  TupleOf<brm::ModP> t(pt.m(), VecOf<brm::ModP>(pt.n()));
  for (int i = 0; i < pt.m(); ++i)
    for (int r = 0; r < pt.n(); ++r) t[i][r] = pt.at(Variable{i + 1, r + 1});
  return t;
}

}  // namespace oracle
