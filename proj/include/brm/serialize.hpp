#pragma once

// Text, LaTeX and JSON forms of polynomials and rational functions, plus a
// parser for the text form.
//
//   text   2*x[1,3]^2*x[2,1] - x[3,2]     (num)/(den) when den != 1
//   latex  2(x_{1}^{(3)})^{2}x_{2}^{(1)} - x_{3}^{(2)}   \frac{..}{..}
//   json   {"num":[{"coeff":"2","vars":[[1,3,2],[2,1,1]]},..],"den":[..]}

#include "brm/factored.hpp"
#include "brm/polynomial.hpp"
#include "brm/rational.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace brm {

enum class Format { Text, Latex, Json };
Format parse_format(std::string_view s);

std::string to_text(const Monomial& m);
std::string to_text(const Polynomial& p);
std::string to_text(const RationalFunction& f);
std::string to_latex(const Monomial& m);
std::string to_latex(const Polynomial& p);
std::string to_latex(const RationalFunction& f);

nlohmann::json to_json(const Monomial& m);  // [[i,r,e],..]
nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const RationalFunction& f);
Polynomial polynomial_from_json(const nlohmann::json& j);
RationalFunction rational_from_json(const nlohmann::json& j);

std::string render(const RationalFunction& f, Format fmt);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses the text form; '+', '-', '*', '/', '^' and parentheses are allowed.
/// With n > 0 superscripts are reduced mod n, otherwise they must be >= 1.
RationalFunction parse_rational(std::string_view text, int n = 0);
/// As parse_rational, but the result must be a polynomial.
Polynomial parse_polynomial(std::string_view text, int n = 0);

}  // namespace brm
