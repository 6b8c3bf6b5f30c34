#pragma once

// Arithmetic in Z/p and evaluation of polynomials at random points, used for
// probabilistic identity testing.

#include "brm/polynomial.hpp"
#include "brm/rational.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace brm {

inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

// Thrown when a denominator vanishes at the chosen point; pick another point.
struct ZeroDenominator : std::domain_error {
  ZeroDenominator() : std::domain_error("denominator vanishes at evaluation point") {}
};

class ModP {
 public:
  ModP() = default;
  ModP(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}
  static ModP from_integer(const Integer& c, std::uint64_t p);

  std::uint64_t value() const { return v_; }
  std::uint64_t prime() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  ModP pow(std::uint64_t e) const;
  ModP inverse() const;  // throws ZeroDenominator on 0

  friend ModP operator+(ModP a, ModP b) {
    std::uint64_t p = a.p_ ? a.p_ : b.p_;
    unsigned __int128 s = static_cast<unsigned __int128>(a.v_) + b.v_;
    return ModP(static_cast<std::uint64_t>(s % p), p);
  }
  friend ModP operator-(ModP a, ModP b) {
    std::uint64_t p = a.p_ ? a.p_ : b.p_;
    return ModP(a.v_ >= b.v_ ? a.v_ - b.v_ : p - (b.v_ - a.v_), p);
  }
  ModP operator-() const { return ModP(v_ ? p_ - v_ : 0, p_ ? p_ : 1); }
  friend ModP operator*(ModP a, ModP b) {
    std::uint64_t p = a.p_ ? a.p_ : b.p_;
    unsigned __int128 s = static_cast<unsigned __int128>(a.v_) * b.v_;
    return ModP(static_cast<std::uint64_t>(s % p), p);
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }

 private:
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

// Assignment of nonzero residues to x_i^{(r)}, 1 <= i <= m, 1 <= r <= n.
class FieldPoint {
 public:
  FieldPoint(int n, int m, std::uint64_t prime = kDefaultPrime);
  static FieldPoint random(int n, int m, std::mt19937_64& rng,
                           std::uint64_t prime = kDefaultPrime);

  int n() const { return n_; }
  int m() const { return m_; }
  std::uint64_t prime() const { return prime_; }

  void set(Variable v, std::uint64_t value);
  // Throws std::out_of_range for an unassigned variable.
  ModP at(Variable v) const;

  ModP eval(const Monomial& mono) const;
  ModP eval(const Polynomial& p) const;
  // Throws ZeroDenominator when the denominator vanishes.
  ModP eval(const RationalFunction& f) const;

 private:
  int n_, m_;
  std::uint64_t prime_;
  std::vector<std::uint64_t> values_;  // 0 = unassigned
};

}  // namespace brm
