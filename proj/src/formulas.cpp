#include "brm/formulas.hpp"

#include "brm/specialfn.hpp"

#include <stdexcept>
#include <string>

namespace brm {

namespace {

using FR = FactoredRational;

// sigma_{(n-1)(b-a)}^{(r)}(x_a..x_b) and friends, as factored values
FR sig(int n, int a, int b, long long r) {
  return FR(sigma(n, a, b, static_cast<long long>(n - 1) * (b - a), r));
}
FR sigb(int n, int a, int b, long long r) {
  return FR(sigma_bar(n, a, b, static_cast<long long>(n - 1) * (b - a), r));
}
FR om(int n, int i, int j, int cut, long long r) { return FR(omega(n, i, j, cut, r)); }
FR x(int n, int vec, long long r) { return FR(Variable::make(vec, r, n)); }

void need(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

void check_nij(int n, int i, int j) {
  need(n >= 2, "n must be at least 2");
  need(1 <= i && i < j, "need 1 <= i < j");
}

}  // namespace

Word oneshift_word(int i, int j, Shift dir) {
  Word w;
  if (dir == Shift::Down)
    for (int t = i; t <= j - 1; ++t) w.push_back(t);
  else
    for (int t = j - 1; t >= i; --t) w.push_back(t);
  return w;
}

Word family_word(int i, int j, int k, Family fam) {
  Word w;
  if (fam == Family::First) {
    for (int t = i; t <= j - 1; ++t) w.push_back(t);
    for (int t = j - 2; t >= k; --t) w.push_back(t);
  } else {
    for (int t = j - 1; t >= i; --t) w.push_back(t);
    for (int t = i + 1; t <= k - 1; ++t) w.push_back(t);
  }
  return w;
}

Word conjugate_word(int i, int j) { return family_word(i, j, i, Family::First); }

FactoredRational oneshift_kappa(int n, int i, int j, long long r, Shift dir) {
  check_nij(n, i, j);
  if (dir == Shift::Down) return sig(n, i, j, r - j + i) / sig(n, i, j - 1, r - j + i);
  return sigb(n, i, j, r - 1) / sigb(n, i + 1, j, r);
}

FactoredRational oneshift_action(int n, int i, int j, int target, long long r, Shift dir) {
  check_nij(n, i, j);
  need(i <= target && target <= j, "target outside the shifted window");
  const int k = target;
  if (dir == Shift::Down) {
    if (k == j)
      return x(n, i, r - j + i) * sig(n, i, j, r - j + i - 1) / sig(n, i, j, r - j + i);
    return x(n, k + 1, r + 1) * sig(n, i, k + 1, r - k + i) * sig(n, i, k, r - k + i - 1) /
           (sig(n, i, k + 1, r - k + i - 1) * sig(n, i, k, r - k + i));
  }
  if (k == i) return x(n, j, r + j - i) * sigb(n, i, j, r) / sigb(n, i, j, r - 1);
  return x(n, k - 1, r - 1) * sigb(n, k - 1, j, r - 2) * sigb(n, k, j, r) /
         (sigb(n, k - 1, j, r - 1) * sigb(n, k, j, r - 1));
}

FactoredRational trans_kappa(int n, int i, int j, int k, long long r) {
  check_nij(n, i, j);
  need(i < k && k < j, "trans_kappa needs i < k < j");
  const long long b = r - k + i;
  return sig(n, i, k, b) * om(n, i, j, k - 1, b) / (sig(n, i, k - 1, b) * om(n, i, j, k, b));
}

FactoredRational trans_kappa_dual(int n, int i, int j, int k, long long r) {
  check_nij(n, i, j);
  need(i < k && k < j, "trans_kappa_dual needs i < k < j");
  const long long b = r - k + i;
  return sigb(n, k, j, r - 1) * om(n, i, j, k, b - 1) /
         (sigb(n, k + 1, j, r) * om(n, i, j, k - 1, b - 1));
}

FactoredRational trans_action(int n, int i, int j, int k, long long r) {
  check_nij(n, i, j);
  need(i <= k && k < j, "trans_action needs i <= k < j");
  const long long b = r - k + i;
  return x(n, j, r + j - k) * sig(n, i, k, b - 1) * om(n, i, j, k, b) /
         (sig(n, i, k, b) * om(n, i, j, k, b - 1));
}

FactoredRational trans_action_dual(int n, int i, int j, int k, long long r) {
  check_nij(n, i, j);
  need(i < k && k <= j, "trans_action_dual needs i < k <= j");
  const long long b = r - k + i;
  return x(n, i, b) * sigb(n, k, j, r) * om(n, i, j, k - 1, b - 1) /
         (sigb(n, k, j, r - 1) * om(n, i, j, k - 1, b));
}

FactoredRational trans_conjugate(int n, int i, int j, int k, long long r) {
  check_nij(n, i, j);
  need(i < k && k < j, "trans_conjugate needs i < k < j");
  const long long b = r - k + i;
  return x(n, k, r) * om(n, i, j, k, b) * om(n, i, j, k - 1, b - 1) /
         (om(n, i, j, k - 1, b) * om(n, i, j, k, b - 1));
}

Tuple<FactoredRational> full_action(int n, int m, int i, int j, int k, Family fam) {
  need(n >= 2, "n must be at least 2");
  need(1 <= i && i < j - 1 && j <= m, "full_action needs 1 <= i < j-1, j <= m");
  if (fam == Family::First)
    need(i <= k && k < j, "first family needs i <= k < j");
  else
    need(i < k && k <= j, "dual family needs i < k <= j");

  Tuple<FactoredRational> t = symbolic_tuple<FactoredRational>(n, m);
  for (int p = i; p <= j; ++p)
    for (int r = 1; r <= n; ++r) {
      FactoredRational v;
      if (fam == Family::First) {
        if (p < k)
          v = oneshift_action(n, i, j, p, r, Shift::Down);
        else if (p == k)
          v = k == i ? oneshift_action(n, i, j, i, r, Shift::Up) : trans_action(n, i, j, k, r);
        else if (p < j)
          v = trans_conjugate(n, i, j, p, r);
        else
          v = oneshift_action(n, i, j, j, r, Shift::Down);
      } else {
        if (p == i)
          v = oneshift_action(n, i, j, i, r, Shift::Up);
        else if (p < k)
          v = trans_conjugate(n, i, j, p, r);
        else if (p == k)
          v = k == j ? oneshift_action(n, i, j, j, r, Shift::Down)
                     : trans_action_dual(n, i, j, k, r);
        else
          v = oneshift_action(n, i, j, p, r, Shift::Up);
      }
      t.at(p, r) = std::move(v);
    }
  return t;
}

}  // namespace brm
