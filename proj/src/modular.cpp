#include "brm/modular.hpp"

#include <string>

namespace brm {

ModP ModP::from_integer(const Integer& c, std::uint64_t p) {
  Integer r = c % p;
  if (r < 0) r += p;
  return ModP(static_cast<std::uint64_t>(r), p);
}

ModP ModP::pow(std::uint64_t e) const {
  ModP result(1, p_);
  ModP base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

ModP ModP::inverse() const {
  if (v_ == 0) throw ZeroDenominator();
  return pow(p_ - 2);
}

FieldPoint::FieldPoint(int n, int m, std::uint64_t prime)
    : n_(n), m_(m), prime_(prime), values_(static_cast<std::size_t>(n) * m, 0) {
  if (n < 1 || m < 1) throw std::invalid_argument("bad point dimensions");
  if (prime < 3) throw std::invalid_argument("prime too small");
}

FieldPoint FieldPoint::random(int n, int m, std::mt19937_64& rng, std::uint64_t prime) {
  FieldPoint pt(n, m, prime);
  std::uniform_int_distribution<std::uint64_t> dist(1, prime - 1);
  for (auto& v : pt.values_) v = dist(rng);
  return pt;
}

void FieldPoint::set(Variable v, std::uint64_t value) {
  if (v.vec < 1 || v.vec > m_ || v.sup < 1 || v.sup > n_)
    throw std::out_of_range("variable outside point dimensions");
  value %= prime_;
  if (value == 0) throw std::invalid_argument("point coordinates must be nonzero");
  values_[static_cast<std::size_t>(v.vec - 1) * n_ + (v.sup - 1)] = value;
}

ModP FieldPoint::at(Variable v) const {
  if (v.vec < 1 || v.vec > m_ || v.sup < 1 || v.sup > n_ ||
      values_[static_cast<std::size_t>(v.vec - 1) * n_ + (v.sup - 1)] == 0)
    throw std::out_of_range("unassigned variable x[" + std::to_string(v.vec) + "," +
                            std::to_string(v.sup) + "]");
  return ModP(values_[static_cast<std::size_t>(v.vec - 1) * n_ + (v.sup - 1)], prime_);
}

ModP FieldPoint::eval(const Monomial& mono) const {
  ModP r(1, prime_);
  for (const auto& [v, e] : mono.factors()) r = r * at(v).pow(e);
  return r;
}

ModP FieldPoint::eval(const Polynomial& p) const {
  ModP r(0, prime_);
  for (const auto& t : p.terms()) r += ModP::from_integer(t.coeff, prime_) * eval(t.mono);
  return r;
}

ModP FieldPoint::eval(const RationalFunction& f) const {
  ModP d = eval(f.den());
  if (d.is_zero()) throw ZeroDenominator();
  return eval(f.num()) / d;
}

}  // namespace brm
