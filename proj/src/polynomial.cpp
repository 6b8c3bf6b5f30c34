#include "brm/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace brm {

Variable Variable::make(int vec, long long sup, int n) {
  if (n < 1 || n > kMaxSup) throw std::invalid_argument("n out of supported range");
  if (vec < 1 || vec > kMaxVec) throw std::invalid_argument("vector index out of range");
  return Variable{vec, residue(sup, n)};
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Packed Monomial::pack(Packed key, std::uint64_t exp) {
  if (exp > kExpMask) throw std::overflow_error("monomial exponent overflow");
  return (key << 16) | static_cast<Packed>(exp);
}

Monomial::Monomial(Variable v, unsigned exponent) {
  if (v.vec < 1 || v.vec > Variable::kMaxVec || v.sup < 1 || v.sup > Variable::kMaxSup)
    throw std::invalid_argument("variable out of range");
  if (exponent == 0) return;
  Packed key = (static_cast<Packed>(v.vec) << 6) | static_cast<Packed>(v.sup);
  data_.push_back(pack(key, exponent));
  degree_ = exponent;
}

unsigned Monomial::exponent(Variable v) const {
  Packed key = (static_cast<Packed>(v.vec) << 6) | static_cast<Packed>(v.sup);
  for (Packed p : data_)
    if (key_of(p) == key) return exp_of(p);
  return 0;
}

std::vector<std::pair<Variable, unsigned>> Monomial::factors() const {
  std::vector<std::pair<Variable, unsigned>> out;
  out.reserve(data_.size());
  for (Packed p : data_) {
    Packed key = key_of(p);
    out.emplace_back(Variable{static_cast<int>(key >> 6), static_cast<int>(key & 63u)},
                     exp_of(p));
  }
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.degree_ = degree_ + other.degree_;
  auto a = data_.begin(), ae = data_.end();
  auto b = other.data_.begin(), be = other.data_.end();
  while (a != ae && b != be) {
    if (key_of(*a) < key_of(*b)) {
      r.data_.push_back(*a++);
    } else if (key_of(*b) < key_of(*a)) {
      r.data_.push_back(*b++);
    } else {
      r.data_.push_back(pack(key_of(*a), std::uint64_t{exp_of(*a)} + exp_of(*b)));
      ++a;
      ++b;
    }
  }
  r.data_.insert(r.data_.end(), a, ae);
  r.data_.insert(r.data_.end(), b, be);
  return r;
}

bool Monomial::divisible_by(const Monomial& d) const {
  if (d.degree_ > degree_) return false;
  auto a = data_.begin(), ae = data_.end();
  for (Packed q : d.data_) {
    while (a != ae && key_of(*a) < key_of(q)) ++a;
    if (a == ae || key_of(*a) != key_of(q) || exp_of(*a) < exp_of(q)) return false;
    ++a;
  }
  return true;
}

std::optional<Monomial> Monomial::divide(const Monomial& d) const {
  if (!divisible_by(d)) return std::nullopt;
  Monomial r;
  r.degree_ = degree_ - d.degree_;
  auto b = d.data_.begin(), be = d.data_.end();
  for (Packed p : data_) {
    if (b != be && key_of(*b) == key_of(p)) {
      Packed e = exp_of(p) - exp_of(*b);
      if (e) r.data_.push_back(pack(key_of(p), e));
      ++b;
    } else {
      r.data_.push_back(p);
    }
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto x = a.data_.begin(), xe = a.data_.end();
  auto y = b.data_.begin(), ye = b.data_.end();
  while (x != xe && y != ye) {
    if (key_of(*x) < key_of(*y)) {
      ++x;
    } else if (key_of(*y) < key_of(*x)) {
      ++y;
    } else {
      Packed e = std::min(exp_of(*x), exp_of(*y));
      r.data_.push_back(pack(key_of(*x), e));
      r.degree_ += e;
      ++x;
      ++y;
    }
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (Packed p : data_) {
    h ^= p;
    h *= 1099511628211ull;
  }
  return h;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  auto x = a.data_.begin(), xe = a.data_.end();
  auto y = b.data_.begin(), ye = b.data_.end();
  for (; x != xe && y != ye; ++x, ++y) {
    if (*x == *y) continue;
    // The smaller variable key is the more significant variable.
    if (Monomial::key_of(*x) != Monomial::key_of(*y))
      return Monomial::key_of(*x) < Monomial::key_of(*y) ? std::strong_ordering::greater
                                                          : std::strong_ordering::less;
    return Monomial::exp_of(*x) <=> Monomial::exp_of(*y);
  }
  // Equal degree and a common prefix means both are exhausted.
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(Integer constant) {
  if (constant != 0) terms_.push_back({Monomial{}, std::move(constant)});
}

Polynomial::Polynomial(Variable v) { terms_.push_back({Monomial{v}, Integer(1)}); }

Polynomial::Polynomial(Monomial m, Integer coeff) {
  if (coeff != 0) terms_.push_back({std::move(m), std::move(coeff)});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  Polynomial p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_unit() && terms_[0].coeff == 1;
}

unsigned Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

std::vector<Variable> Polynomial::variables() const {
  std::vector<Variable> vars;
  for (const auto& t : terms_)
    for (const auto& [v, e] : t.mono.factors()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

Integer Polynomial::content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    g = boost::multiprecision::gcd(g, t.coeff);
    if (g == 1) break;
  }
  return boost::multiprecision::abs(g);
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) {
    if (g.is_unit()) break;
    g = Monomial::gcd(g, t.mono);
  }
  return g;
}

bool Polynomial::subtraction_free() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.coeff > 0; });
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge two sorted term lists; sign = +1 or -1 applied to b.
std::vector<Polynomial::Term> merge_terms(const std::vector<Polynomial::Term>& a,
                                          const std::vector<Polynomial::Term>& b,
                                          int sign) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  auto x = a.begin(), y = b.begin();
  while (x != a.end() && y != b.end()) {
    auto c = x->mono <=> y->mono;
    if (c > 0) {
      out.push_back(*x++);
    } else if (c < 0) {
      out.push_back({y->mono, sign > 0 ? y->coeff : Integer(-y->coeff)});
      ++y;
    } else {
      Integer s = x->coeff;
      if (sign > 0) s += y->coeff;
      else s -= y->coeff;
      if (s != 0) out.push_back({x->mono, std::move(s)});
      ++x;
      ++y;
    }
  }
  for (; x != a.end(); ++x) out.push_back(*x);
  for (; y != b.end(); ++y) out.push_back({y->mono, sign > 0 ? y->coeff : Integer(-y->coeff)});
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.times(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.size() == 1) return a.times(b.terms_[0].mono, b.terms_[0].coeff);
  const Polynomial& big = a.size() >= b.size() ? a : b;
  const Polynomial& small = a.size() >= b.size() ? b : a;
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(big.size() * small.size());
  for (const auto& s : small.terms_) {
    for (const auto& t : big.terms_) {
      auto [it, inserted] = acc.try_emplace(s.mono * t.mono);
      it->second += s.coeff * t.coeff;
    }
  }
  std::vector<Polynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  std::sort(terms.begin(), terms.end(),
            [](const Polynomial::Term& x, const Polynomial::Term& y) { return x.mono > y.mono; });
  Polynomial r;
  r.terms_ = std::move(terms);
  return r;
}

Polynomial Polynomial::times(const Monomial& m, const Integer& c) const {
  if (c == 0) return {};
  Polynomial r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order of terms.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::divided_by_integer(const Integer& c) const {
  if (c == 0) throw std::domain_error("division by zero");
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    if (t.coeff % c != 0) throw std::domain_error("integer does not divide content");
    t.coeff /= c;
  }
  return r;
}

Polynomial Polynomial::divided_by_monomial(const Monomial& m) const {
  Polynomial r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    auto q = t.mono.divide(m);
    if (!q) throw std::domain_error("monomial does not divide polynomial");
    r.terms_.push_back({std::move(*q), t.coeff});
  }
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

std::size_t Polynomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ terms_.size();
  for (const auto& t : terms_) {
    h ^= t.mono.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    std::size_t ch = static_cast<std::size_t>(static_cast<long long>(t.coeff % 1000003));
    h ^= ch + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (p.is_zero()) return Polynomial{};
  const auto& lead_d = d.leading();
  if (d.size() == 1) {
    std::vector<Polynomial::Term> q;
    q.reserve(p.size());
    for (const auto& t : p.terms()) {
      auto m = t.mono.divide(lead_d.mono);
      if (!m || t.coeff % lead_d.coeff != 0) return std::nullopt;
      q.push_back({std::move(*m), t.coeff / lead_d.coeff});
    }
    return Polynomial::from_terms(std::move(q));
  }
  // Cheap necessary conditions: leading and trailing terms must divide.
  if (!p.leading().mono.divisible_by(lead_d.mono)) return std::nullopt;
  if (!p.trailing().mono.divisible_by(d.trailing().mono)) return std::nullopt;
  if (p.total_degree() < d.total_degree()) return std::nullopt;

  auto greater = [](const Monomial& a, const Monomial& b) { return a > b; };
  std::map<Monomial, Integer, decltype(greater)> rem(greater);
  for (const auto& t : p.terms()) rem.emplace(t.mono, t.coeff);

  std::vector<Polynomial::Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    auto qm = it->first.divide(lead_d.mono);
    if (!qm) return std::nullopt;
    if (it->second % lead_d.coeff != 0) return std::nullopt;
    Integer qc = it->second / lead_d.coeff;
    for (const auto& dt : d.terms()) {
      Monomial m = dt.mono * *qm;
      auto [pos, inserted] = rem.try_emplace(std::move(m), 0);
      pos->second -= qc * dt.coeff;
      if (pos->second == 0) rem.erase(pos);
    }
    quotient.push_back({std::move(*qm), std::move(qc)});
  }
  return Polynomial::from_terms(std::move(quotient));
}

Polynomial product(std::span<const Polynomial> factors) {
  Polynomial r(1);
  for (const auto& f : factors) r *= f;
  return r;
}

}  // namespace brm
