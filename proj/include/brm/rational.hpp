#pragma once

// Quotients of integer polynomials.  There is no polynomial gcd here: a value
// is normalized only by integer content, sign of the denominator and common
// monomial factors, so equal values may have different representations.
// Equality goes through cross multiplication.

#include "brm/polynomial.hpp"

namespace brm {

class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Polynomial num);  // NOLINT
  RationalFunction(int c) : RationalFunction(Polynomial(c)) {}  // NOLINT
  RationalFunction(Variable v) : RationalFunction(Polynomial(v)) {}  // NOLINT
  /// Throws std::domain_error when den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction inverse() const;
  RationalFunction operator-() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  // Same stored numerator and denominator.
  bool same_form(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

/// a.num * b.den == b.num * a.den
bool rf_eq(const RationalFunction& a, const RationalFunction& b);

}  // namespace brm
