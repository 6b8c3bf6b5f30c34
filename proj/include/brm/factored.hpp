#pragma once

// Rational functions kept as  c * x^a * prod f_i^{e_i}  with c rational, a an
// integer exponent vector and f_i primitive polynomials (at least two terms,
// positive leading coefficient, no monomial content).  Factors are interned so
// identical ones are shared and cancel without any polynomial arithmetic.
//
// Products and quotients stay cheap.  A sum pulls out the common part of its
// summands, expands only the cofactors, and then tries to divide the result by
// the denominator factors of the common part.  Nothing here factors
// polynomials, so two equal values need not look alike; use equivalent().

#include "brm/modular.hpp"
#include "brm/polynomial.hpp"
#include "brm/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <span>
#include <vector>

namespace brm {

using Rational = boost::multiprecision::cpp_rational;

class Factor {
 public:
  // Canonical shared instance for a primitive polynomial.
  static std::shared_ptr<const Factor> intern(Polynomial p);

  const Polynomial& poly() const { return poly_; }
  std::uint64_t id() const { return id_; }

  Factor(Polynomial p, std::uint64_t id) : poly_(std::move(p)), id_(id) {}

 private:
  Polynomial poly_;
  std::uint64_t id_;
};

class FactoredRational {
 public:
  using FactorPtr = std::shared_ptr<const Factor>;
  struct FactorPower {
    FactorPtr factor;
    int exp;
  };
  struct VarPower {
    Variable var;
    int exp;
    friend bool operator==(const VarPower&, const VarPower&) = default;
  };

  FactoredRational() = default;  // zero
  FactoredRational(int c) : FactoredRational(Rational(c)) {}  // NOLINT
  FactoredRational(Rational c);                                 // NOLINT
  FactoredRational(Variable v);                                 // NOLINT
  FactoredRational(const Monomial& m);                          // NOLINT
  FactoredRational(const Polynomial& p);                        // NOLINT
  FactoredRational(const RationalFunction& f);                  // NOLINT

  bool is_zero() const { return coeff_ == 0; }
  bool is_one() const { return coeff_ == 1 && vars_.empty() && factors_.empty(); }
  const Rational& coeff() const { return coeff_; }
  const std::vector<VarPower>& vars() const { return vars_; }
  const std::vector<FactorPower>& factors() const { return factors_; }

  FactoredRational inverse() const;
  FactoredRational operator-() const;
  FactoredRational pow(int e) const;

  friend FactoredRational operator*(const FactoredRational& a, const FactoredRational& b);
  friend FactoredRational operator/(const FactoredRational& a, const FactoredRational& b);
  friend FactoredRational operator+(const FactoredRational& a, const FactoredRational& b);
  friend FactoredRational operator-(const FactoredRational& a, const FactoredRational& b);
  FactoredRational& operator*=(const FactoredRational& o) { return *this = *this * o; }
  FactoredRational& operator/=(const FactoredRational& o) { return *this = *this / o; }
  FactoredRational& operator+=(const FactoredRational& o) { return *this = *this + o; }

  static FactoredRational sum(std::span<const FactoredRational> terms);
  static FactoredRational product(std::span<const FactoredRational> terms);

  // Positive part and negative part multiplied out.
  Polynomial numerator() const;
  Polynomial denominator() const;
  RationalFunction expand() const;

  ModP eval(const FieldPoint& pt) const;

  // Structural identity of the stored form.
  bool same_form(const FactoredRational& o) const;

 private:
  Rational coeff_ = 0;
  std::vector<VarPower> vars_;        // sorted by variable, nonzero exponents
  std::vector<FactorPower> factors_;  // sorted by factor id, nonzero exponents
};

/// Exact equality of the represented rational functions.
bool equivalent(const FactoredRational& a, const FactoredRational& b);

inline FactoredRational sum_of(std::span<const FactoredRational> terms) {
  return FactoredRational::sum(terms);
}

}  // namespace brm
