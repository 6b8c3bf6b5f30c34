#include "brm/serialize.hpp"

#include <cctype>
#include <sstream>

namespace brm {

Format parse_format(std::string_view s) {
  if (s == "text") return Format::Text;
  if (s == "latex") return Format::Latex;
  if (s == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

std::string to_text(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += "x[" + std::to_string(v.vec) + "," + std::to_string(v.sup) + "]";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string to_latex(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    std::string x = "x_{" + std::to_string(v.vec) + "}^{(" + std::to_string(v.sup) + ")}";
    out += e == 1 ? x : "(" + x + ")^{" + std::to_string(e) + "}";
  }
  return out;
}

namespace {

template <class MonoFn>
std::string render_poly(const Polynomial& p, MonoFn mono, const char* times) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = t.coeff < 0;
    Integer c = neg ? Integer(-t.coeff) : t.coeff;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_unit()) {
      out += c.str();
    } else {
      if (c != 1) out += c.str() + times;
      out += mono(t.mono);
    }
  }
  return out;
}

}  // namespace

std::string to_text(const Polynomial& p) {
  return render_poly(p, [](const Monomial& m) { return to_text(m); }, "*");
}

std::string to_latex(const Polynomial& p) {
  return render_poly(p, [](const Monomial& m) { return to_latex(m); }, "");
}

std::string to_text(const RationalFunction& f) {
  if (f.is_polynomial()) return to_text(f.num());
  return "(" + to_text(f.num()) + ")/(" + to_text(f.den()) + ")";
}

std::string to_latex(const RationalFunction& f) {
  if (f.is_polynomial()) return to_latex(f.num());
  return "\\frac{" + to_latex(f.num()) + "}{" + to_latex(f.den()) + "}";
}

nlohmann::json to_json(const Monomial& m) {
  auto arr = nlohmann::json::array();
  for (const auto& [v, e] : m.factors()) arr.push_back({v.vec, v.sup, e});
  return arr;
}

nlohmann::json to_json(const Polynomial& p) {
  auto arr = nlohmann::json::array();
  for (const auto& t : p.terms())
    arr.push_back({{"coeff", t.coeff.str()}, {"vars", to_json(t.mono)}});
  return arr;
}

nlohmann::json to_json(const RationalFunction& f) {
  return {{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  std::vector<Polynomial::Term> terms;
  for (const auto& t : j) {
    Monomial m;
    for (const auto& v : t.at("vars")) {
      int e = v.at(2).get<int>();
      if (e < 1) throw ParseError("exponent must be positive");
      m = m * Monomial(Variable{v.at(0).get<int>(), v.at(1).get<int>()},
                       static_cast<unsigned>(e));
    }
    terms.push_back({std::move(m), Integer(t.at("coeff").get<std::string>())});
  }
  return Polynomial::from_terms(std::move(terms));
}

RationalFunction rational_from_json(const nlohmann::json& j) {
  if (j.is_array()) return RationalFunction(polynomial_from_json(j));
  Polynomial den = j.contains("den") ? polynomial_from_json(j.at("den")) : Polynomial(1);
  return RationalFunction(polynomial_from_json(j.at("num")), den);
}

std::string render(const RationalFunction& f, Format fmt) {
  switch (fmt) {
    case Format::Text: return to_text(f);
    case Format::Latex: return to_latex(f);
    case Format::Json: return to_json(f).dump();
  }
  return {};
}

// ---------------------------------------------------------------------------
// recursive descent parser

namespace {

class Parser {
 public:
  Parser(std::string_view s, int n) : s_(s), n_(n) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }
  long long small_int() {
    bool neg = eat('-');
    std::string d = digits();
    if (d.size() > 9) fail("index too large");
    long long v = std::stoll(d);
    return neg ? -v : v;
  }

  RationalFunction expr() {
    RationalFunction r;
    bool neg = eat('-');
    r = term();
    if (neg) r = -r;
    for (;;) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else return r;
    }
  }
  RationalFunction term() {
    RationalFunction r = power();
    for (;;) {
      if (eat('*')) r *= power();
      else if (eat('/')) {
        RationalFunction d = power();
        if (d.is_zero()) fail("division by zero");
        r /= d;
      } else return r;
    }
  }
  RationalFunction power() {
    RationalFunction b = atom();
    if (eat('^')) {
      long long e = small_int();
      if (e < 0) {
        if (b.is_zero()) fail("division by zero");
        b = b.inverse();
        e = -e;
      }
      RationalFunction r(1);
      for (long long i = 0; i < e; ++i) r *= b;
      return r;
    }
    return b;
  }
  RationalFunction atom() {
    skip();
    if (eat('(')) {
      RationalFunction r = expr();
      expect(')');
      return r;
    }
    if (eat('x')) {
      expect('[');
      long long i = small_int();
      expect(',');
      long long r = small_int();
      expect(']');
      if (i < 1 || i > Variable::kMaxVec) fail("vector index out of range");
      Variable v;
      if (n_ > 0) {
        v = Variable::make(static_cast<int>(i), r, n_);
      } else {
        if (r < 1 || r > Variable::kMaxSup) fail("superscript out of range");
        v = Variable{static_cast<int>(i), static_cast<int>(r)};
      }
      return RationalFunction(v);
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      return RationalFunction(Polynomial(Integer(digits())));
    fail("expected a term");
  }

  std::string_view s_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational(std::string_view text, int n) {
  return Parser(text, n).parse();
}

Polynomial parse_polynomial(std::string_view text, int n) {
  RationalFunction f = parse_rational(text, n);
  if (f.is_polynomial()) return f.num();
  auto q = divide_exact(f.num(), f.den());
  if (!q) throw ParseError("expression is not a polynomial");
  return *q;
}

}  // namespace brm
