#pragma once

// Exact sparse multivariate polynomials over the integers.
//
// Variables are the symbols x_i^{(r)}: a vector position i >= 1 and a cyclic
// superscript r in 1..n.  Monomials are kept sorted by variable and compared
// in graded lexicographic order with x_1^{(1)} > x_1^{(2)} > ... > x_2^{(1)} > ...
// A Polynomial stores its terms in strictly decreasing monomial order with no
// zero coefficients, so structural equality is mathematical equality.

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace brm {

using Integer = boost::multiprecision::cpp_int;

/// Reduce an arbitrary integer superscript into the residue range 1..n.
constexpr int residue(long long r, int n) {
  long long m = r % n;
  if (m <= 0) m += n;
  return static_cast<int>(m);
}

struct Variable {
  int vec = 1;  // 1..m
  int sup = 1;  // 1..n

  static constexpr int kMaxVec = 1023;
  static constexpr int kMaxSup = 63;

  /// x_vec^{(sup)} with the superscript reduced modulo n.
  static Variable make(int vec, long long sup, int n);

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable& a, const Variable& b) = default;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(Variable v, unsigned exponent = 1);

  unsigned degree() const { return degree_; }
  bool is_unit() const { return data_.empty(); }
  unsigned exponent(Variable v) const;
  std::size_t variable_count() const { return data_.size(); }

  /// (variable, exponent) pairs in ascending variable order.
  std::vector<std::pair<Variable, unsigned>> factors() const;

  Monomial operator*(const Monomial& other) const;
  /// this / d when d divides this.
  std::optional<Monomial> divide(const Monomial& d) const;
  bool divisible_by(const Monomial& d) const;

  /// Componentwise minimum of exponents.
  static Monomial gcd(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.data_ == b.data_;
  }
  /// Graded lexicographic order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  // Each entry packs (vec << 22) | (sup << 16) | exponent, sorted ascending.
  using Packed = std::uint32_t;
  static constexpr Packed kExpMask = 0xFFFFu;
  static Packed key_of(Packed p) { return p >> 16; }
  static Packed exp_of(Packed p) { return p & kExpMask; }
  static Packed pack(Packed key, std::uint64_t exp);

  boost::container::small_vector<Packed, 8> data_;
  unsigned degree_ = 0;

  friend class Polynomial;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Integer coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  Polynomial(Integer constant);  // NOLINT: implicit integer embedding
  Polynomial(int constant) : Polynomial(Integer(constant)) {}  // NOLINT
  Polynomial(Variable v);        // NOLINT
  Polynomial(Monomial m, Integer coeff = 1);

  /// Builds the canonical form from arbitrary (possibly repeated, zero) terms.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  unsigned total_degree() const;
  const Term& leading() const { return terms_.front(); }
  const Term& trailing() const { return terms_.back(); }
  std::vector<Variable> variables() const;

  /// gcd of all coefficients (0 for the zero polynomial), always >= 0.
  Integer content() const;
  /// Largest monomial dividing every term (unit for the zero polynomial).
  Monomial monomial_content() const;
  /// True when every coefficient is positive.
  bool subtraction_free() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial times(const Monomial& m, const Integer& c = 1) const;
  /// Divides every coefficient by c; c must divide the content.
  Polynomial divided_by_integer(const Integer& c) const;
  /// Divides every term by m; m must divide the monomial content.
  Polynomial divided_by_monomial(const Monomial& m) const;
  Polynomial pow(unsigned e) const;

  std::size_t hash() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::vector<Term> terms_;  // strictly decreasing monomials, nonzero coeffs
};

struct PolynomialHash {
  std::size_t operator()(const Polynomial& p) const { return p.hash(); }
};

/// Single-divisor division under graded lex order.  Returns q with p = q*d when
/// the division leaves no remainder and q has integer coefficients.
/// Throws std::domain_error when d is zero.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d);

/// Product of a range of polynomials.
Polynomial product(std::span<const Polynomial> factors);

}  // namespace brm
