#include "brm/factored.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace brm {

namespace {

struct InternTable {
  std::mutex mu;
  std::unordered_map<std::size_t, std::vector<std::weak_ptr<const Factor>>> buckets;
  std::uint64_t next_id = 1;
};

InternTable& table() {
  static InternTable t;
  return t;
}

Integer num_of(const Rational& r) { return boost::multiprecision::numerator(r); }
Integer den_of(const Rational& r) { return boost::multiprecision::denominator(r); }

// Merge two sorted (key, exp) lists adding exponents scaled by sign.
template <class T, class Key>
std::vector<T> merge_powers(const std::vector<T>& a, const std::vector<T>& b, int sign,
                            Key key) {
  std::vector<T> out;
  out.reserve(a.size() + b.size());
  auto x = a.begin(), y = b.begin();
  while (x != a.end() || y != b.end()) {
    if (y == b.end() || (x != a.end() && key(*x) < key(*y))) {
      out.push_back(*x++);
    } else if (x == a.end() || key(*y) < key(*x)) {
      T t = *y++;
      t.exp *= sign;
      out.push_back(t);
    } else {
      T t = *x;
      t.exp += sign * y->exp;
      if (t.exp != 0) out.push_back(t);
      ++x;
      ++y;
    }
  }
  return out;
}

auto var_key = [](const FactoredRational::VarPower& v) { return v.var; };
auto factor_key = [](const FactoredRational::FactorPower& f) { return f.factor->id(); };

}  // namespace

std::shared_ptr<const Factor> Factor::intern(Polynomial p) {
  auto& t = table();
  std::size_t h = p.hash();
  std::lock_guard lock(t.mu);
  auto& bucket = t.buckets[h];
  std::shared_ptr<const Factor> found;
  std::erase_if(bucket, [&](const std::weak_ptr<const Factor>& w) {
    auto s = w.lock();
    if (!s) return true;
    if (!found && s->poly() == p) found = s;
    return false;
  });
  if (found) return found;
  auto f = std::make_shared<const Factor>(std::move(p), t.next_id++);
  bucket.push_back(f);
  return f;
}

FactoredRational::FactoredRational(Rational c) : coeff_(std::move(c)) {}

FactoredRational::FactoredRational(Variable v) : coeff_(1), vars_{{v, 1}} {}

FactoredRational::FactoredRational(const Monomial& m) : coeff_(1) {
  for (const auto& [v, e] : m.factors()) vars_.push_back({v, static_cast<int>(e)});
}

FactoredRational::FactoredRational(const Polynomial& p) {
  if (p.is_zero()) return;
  Integer c = p.content();
  if (p.leading().coeff < 0) c = -c;
  Monomial mc = p.monomial_content();
  coeff_ = Rational(c);
  for (const auto& [v, e] : mc.factors()) vars_.push_back({v, static_cast<int>(e)});
  if (p.is_monomial()) return;
  Polynomial q = p.divided_by_integer(c).divided_by_monomial(mc);
  factors_.push_back({Factor::intern(std::move(q)), 1});
}

FactoredRational::FactoredRational(const RationalFunction& f)
    : FactoredRational(FactoredRational(f.num()) / FactoredRational(f.den())) {}

FactoredRational FactoredRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero rational function");
  FactoredRational r;
  r.coeff_ = 1 / coeff_;
  r.vars_ = vars_;
  for (auto& v : r.vars_) v.exp = -v.exp;
  r.factors_ = factors_;
  for (auto& f : r.factors_) f.exp = -f.exp;
  return r;
}

FactoredRational FactoredRational::operator-() const {
  FactoredRational r = *this;
  r.coeff_ = -r.coeff_;
  return r;
}

FactoredRational FactoredRational::pow(int e) const {
  if (e == 0) return FactoredRational(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("division by zero rational function");
    return {};
  }
  FactoredRational r;
  r.coeff_ = 1;
  Rational base = e > 0 ? coeff_ : 1 / coeff_;
  for (int i = 0; i < std::abs(e); ++i) r.coeff_ *= base;
  r.vars_ = vars_;
  for (auto& v : r.vars_) v.exp *= e;
  r.factors_ = factors_;
  for (auto& f : r.factors_) f.exp *= e;
  return r;
}

FactoredRational operator*(const FactoredRational& a, const FactoredRational& b) {
  if (a.is_zero() || b.is_zero()) return {};
  FactoredRational r;
  r.coeff_ = a.coeff_ * b.coeff_;
  r.vars_ = merge_powers(a.vars_, b.vars_, +1, var_key);
  r.factors_ = merge_powers(a.factors_, b.factors_, +1, factor_key);
  return r;
}

FactoredRational operator/(const FactoredRational& a, const FactoredRational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  if (a.is_zero()) return {};
  FactoredRational r;
  r.coeff_ = a.coeff_ / b.coeff_;
  r.vars_ = merge_powers(a.vars_, b.vars_, -1, var_key);
  r.factors_ = merge_powers(a.factors_, b.factors_, -1, factor_key);
  return r;
}

FactoredRational operator+(const FactoredRational& a, const FactoredRational& b) {
  const FactoredRational terms[2] = {a, b};
  return FactoredRational::sum(terms);
}

FactoredRational operator-(const FactoredRational& a, const FactoredRational& b) {
  return a + (-b);
}

FactoredRational FactoredRational::product(std::span<const FactoredRational> terms) {
  FactoredRational r(1);
  for (const auto& t : terms) r *= t;
  return r;
}

FactoredRational FactoredRational::sum(std::span<const FactoredRational> terms) {
  std::vector<const FactoredRational*> live;
  for (const auto& t : terms)
    if (!t.is_zero()) live.push_back(&t);
  if (live.empty()) return {};
  if (live.size() == 1) return *live[0];

  // Same shape: only the coefficients differ.
  bool same_shape = true;
  for (auto* t : live) {
    if (t->vars_ != live[0]->vars_ || t->factors_.size() != live[0]->factors_.size()) {
      same_shape = false;
      break;
    }
    for (std::size_t i = 0; i < t->factors_.size(); ++i)
      if (t->factors_[i].factor != live[0]->factors_[i].factor ||
          t->factors_[i].exp != live[0]->factors_[i].exp) {
        same_shape = false;
        break;
      }
    if (!same_shape) break;
  }
  if (same_shape) {
    FactoredRational r = *live[0];
    for (std::size_t i = 1; i < live.size(); ++i) r.coeff_ += live[i]->coeff_;
    if (r.coeff_ == 0) return {};
    return r;
  }

  // Common part g: gcd/lcm of coefficients, minimum exponents (absent = 0).
  Integer gn = 0, gd = 1;
  std::map<Variable, int> gv;
  std::map<std::uint64_t, std::pair<FactorPtr, int>> gf;
  for (auto* t : live) {
    gn = boost::multiprecision::gcd(gn, num_of(t->coeff_));
    gd = boost::multiprecision::lcm(gd, den_of(t->coeff_));
    for (const auto& v : t->vars_) gv.emplace(v.var, 0);
    for (const auto& f : t->factors_) gf.emplace(f.factor->id(), std::make_pair(f.factor, 0));
  }
  for (auto* t : live) {
    for (auto& [var, e] : gv) {
      auto it = std::find_if(t->vars_.begin(), t->vars_.end(),
                             [&](const VarPower& p) { return p.var == var; });
      e = std::min(e, it == t->vars_.end() ? 0 : it->exp);
    }
    for (auto& [id, fe] : gf) {
      auto it = std::find_if(t->factors_.begin(), t->factors_.end(),
                             [&](const FactorPower& p) { return p.factor->id() == id; });
      fe.second = std::min(fe.second, it == t->factors_.end() ? 0 : it->exp);
    }
  }
  FactoredRational g;
  g.coeff_ = Rational(boost::multiprecision::abs(gn), gd);
  for (const auto& [var, e] : gv)
    if (e != 0) g.vars_.push_back({var, e});
  for (const auto& [id, fe] : gf)
    if (fe.second != 0) g.factors_.push_back({fe.first, fe.second});

  // Expand each cofactor t/g, which is a polynomial.
  Polynomial s;
  for (auto* t : live) {
    FactoredRational c = *t / g;
    s += c.numerator();
  }
  if (s.is_zero()) return {};

  // Denominator factors of g are the only ones that can cancel against s.
  FactoredRational cancelled(1);
  for (const auto& f : g.factors_) {
    if (f.exp >= 0) continue;
    for (int k = 0; k < -f.exp && !s.is_constant(); ++k) {
      auto q = divide_exact(s, f.factor->poly());
      if (!q) break;
      s = std::move(*q);
      FactoredRational one;
      one.coeff_ = 1;
      one.factors_.push_back({f.factor, 1});
      cancelled *= one;
    }
  }
  return g * cancelled * FactoredRational(s);
}

Polynomial FactoredRational::numerator() const {
  if (is_zero()) return {};
  Monomial m;
  for (const auto& v : vars_)
    if (v.exp > 0) m = m * Monomial(v.var, static_cast<unsigned>(v.exp));
  Polynomial r(m, num_of(coeff_));
  for (const auto& f : factors_)
    if (f.exp > 0) r *= f.factor->poly().pow(static_cast<unsigned>(f.exp));
  return r;
}

Polynomial FactoredRational::denominator() const {
  Monomial m;
  for (const auto& v : vars_)
    if (v.exp < 0) m = m * Monomial(v.var, static_cast<unsigned>(-v.exp));
  Polynomial r(m, den_of(coeff_));
  for (const auto& f : factors_)
    if (f.exp < 0) r *= f.factor->poly().pow(static_cast<unsigned>(-f.exp));
  return r;
}

RationalFunction FactoredRational::expand() const {
  if (is_zero()) return {};
  return RationalFunction(numerator(), denominator());
}

ModP FactoredRational::eval(const FieldPoint& pt) const {
  const std::uint64_t p = pt.prime();
  if (is_zero()) return ModP(0, p);
  ModP d = ModP::from_integer(den_of(coeff_), p);
  ModP r = ModP::from_integer(num_of(coeff_), p) / d;
  for (const auto& v : vars_) {
    ModP x = pt.at(v.var);
    r = r * (v.exp > 0 ? x.pow(v.exp) : x.inverse().pow(-v.exp));
  }
  for (const auto& f : factors_) {
    ModP x = pt.eval(f.factor->poly());
    r = r * (f.exp > 0 ? x.pow(f.exp) : x.inverse().pow(-f.exp));
  }
  return r;
}

bool FactoredRational::same_form(const FactoredRational& o) const {
  if (coeff_ != o.coeff_ || vars_ != o.vars_ || factors_.size() != o.factors_.size())
    return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i].factor != o.factors_[i].factor || factors_[i].exp != o.factors_[i].exp)
      return false;
  return true;
}

namespace {

void dims_of(const FactoredRational& f, int& n, int& m) {
  auto see = [&](Variable v) {
    m = std::max(m, v.vec);
    n = std::max(n, v.sup);
  };
  for (const auto& v : f.vars()) see(v.var);
  for (const auto& fp : f.factors())
    for (const auto& t : fp.factor->poly().terms())
      for (const auto& [v, e] : t.mono.factors()) see(v);
}

}  // namespace

bool equivalent(const FactoredRational& a, const FactoredRational& b) {
  if (a.same_form(b)) return true;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  FactoredRational q = a / b;
  if (q.is_one()) return true;

  // A random evaluation refutes most inequalities cheaply.
  int n = 1, m = 1;
  dims_of(q, n, m);
  std::mt19937_64 rng(0x5eed);
  for (int attempt = 0; attempt < 4; ++attempt) {
    FieldPoint pt = FieldPoint::random(n, m, rng);
    try {
      if (q.eval(pt) != ModP(1, pt.prime())) return false;
      break;
    } catch (const ZeroDenominator&) {
    }
  }

  // Pairwise exact division between numerator and denominator factors.
  std::vector<Polynomial> top, bottom;
  for (const auto& f : q.factors())
    for (int k = 0; k < std::abs(f.exp); ++k)
      (f.exp > 0 ? top : bottom).push_back(f.factor->poly());
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < top.size() && !progress; ++i)
      for (std::size_t j = 0; j < bottom.size() && !progress; ++j) {
        const Polynomial& big = top[i].size() >= bottom[j].size() ? top[i] : bottom[j];
        const Polynomial& small = top[i].size() >= bottom[j].size() ? bottom[j] : top[i];
        auto d = divide_exact(big, small);
        if (!d) continue;
        if (&big == &top[i]) {
          top[i] = std::move(*d);
          bottom.erase(bottom.begin() + static_cast<std::ptrdiff_t>(j));
        } else {
          bottom[j] = std::move(*d);
          top.erase(top.begin() + static_cast<std::ptrdiff_t>(i));
        }
        progress = true;
      }
  }
  Monomial mt, mb;
  for (const auto& v : q.vars()) {
    if (v.exp > 0) mt = mt * Monomial(v.var, static_cast<unsigned>(v.exp));
    else mb = mb * Monomial(v.var, static_cast<unsigned>(-v.exp));
  }
  Polynomial lhs(mt, boost::multiprecision::numerator(q.coeff()));
  Polynomial rhs(mb, boost::multiprecision::denominator(q.coeff()));
  for (const auto& p : top) lhs *= p;
  for (const auto& p : bottom) rhs *= p;
  return lhs == rhs;
}

}  // namespace brm
