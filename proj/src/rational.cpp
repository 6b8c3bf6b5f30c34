#include "brm/rational.hpp"

#include <stdexcept>

namespace brm {

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {
  normalize();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("division by zero rational function");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (num_ == den_) {
    num_ = den_ = Polynomial(1);
    return;
  }
  Integer g = boost::multiprecision::gcd(num_.content(), den_.content());
  if (den_.leading().coeff < 0) g = -g;
  if (g != 1) {
    num_ = num_.divided_by_integer(g);
    den_ = den_.divided_by_integer(g);
  }
  if (!den_.is_monomial() || !den_.leading().mono.is_unit()) {
    Monomial m = Monomial::gcd(num_.monomial_content(), den_.monomial_content());
    if (!m.is_unit()) {
      num_ = num_.divided_by_monomial(m);
      den_ = den_.divided_by_monomial(m);
    }
  }
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw std::domain_error("division by zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Cancel identical cross factors before multiplying out.
  if (a.num_ == b.den_) return RationalFunction(b.num_, a.den_);
  if (a.den_ == b.num_) return RationalFunction(a.num_, b.den_);
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse();
}

bool rf_eq(const RationalFunction& a, const RationalFunction& b) {
  if (a.same_form(b)) return true;
  if (a.is_zero() != b.is_zero()) return false;
  return a.num() * b.den() == b.num() * a.den();
}

}  // namespace brm
