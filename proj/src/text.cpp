#include "polyconvex/text.hpp"

#include <algorithm>
#include <cctype>

namespace polycvx {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t arity) : text_(text), arity_(arity) {}

  Polynomial run() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool next_is_digit() const {
    return !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string uint_digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (next_is_digit()) ++pos_;
    if (start == pos_) throw ParseError("expected unsigned integer", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      if (c == '+') {
        acc += term();
      } else {
        acc -= term();
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') return acc;
      ++pos_;
      acc = acc * factor();
    }
  }

  Polynomial factor() {
    skip_ws();
    if (peek() == '-') {
      // A signed literal belongs to the base ("-2^2" is 4); otherwise the
      // minus binds looser than '^', so "-x1^2" is -(x1^2).
      const std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (!next_is_digit()) return -factor();
      pos_ = save;
    }
    Polynomial b = base();
    skip_ws();
    if (peek() != '^') return b;
    ++pos_;
    const std::size_t at = pos_;
    const std::string digits = uint_digits();
    if (digits.size() > 6) throw ParseError("exponent too large", at);
    return pow(b, static_cast<unsigned>(std::stoul(digits)));
  }

  Polynomial base() {
    skip_ws();
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '-') {
      ++pos_;
      skip_ws();
      return Polynomial::constant(arity_, -rational_literal());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(arity_, rational_literal());
    }
    if (c == 'x') {
      ++pos_;
      const std::size_t at = pos_;
      const std::string digits = uint_digits();
      if (digits.size() > 9) throw ParseError("variable index too large", at);
      const auto index = std::stoul(digits);
      if (index == 0) throw ParseError("variable indices start at 1", at);
      if (index > arity_) {
        throw ParseError("variable x" + digits + " exceeds arity " + std::to_string(arity_), start);
      }
      return Polynomial::variable(arity_, index - 1);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Rational rational_literal() {
    const std::string num = uint_digits();
    skip_ws();
    if (peek() != '/') return Rational(Integer(num, 10));
    ++pos_;
    const std::size_t at = pos_;
    const std::string den = uint_digits();
    Integer d(den, 10);
    if (d == 0) throw ParseError("zero denominator", at);
    return Rational(Integer(num, 10), d);
  }

  std::string_view text_;
  std::size_t arity_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Exponents& e, std::string_view var_prefix, bool indexed) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var_prefix;
    if (indexed) out += std::to_string(i + 1);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

// Appends one signed term; `first` selects the leading-term spelling.
void append_term(std::string& out, const Rational& c, const std::string& mono, bool first) {
  const bool negative = c.sign() < 0;
  const Rational mag = c.abs();
  if (first) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (mono.empty()) {
    out += mag.str();
  } else if (mag == Rational(1)) {
    out += mono;
  } else {
    out += mag.str() + "*" + mono;
  }
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t arity) {
  if (arity == 0) throw std::invalid_argument("arity must be positive");
  return Parser(text, arity).run();
}

std::size_t infer_arity(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    std::size_t j = i + 1;
    std::size_t v = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && j - i < 10) {
      v = v * 10 + static_cast<std::size_t>(text[j] - '0');
      ++j;
    }
    best = std::max(best, v);
  }
  return best;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    append_term(out, it->second, monomial_text(it->first, "x", true), first);
    first = false;
  }
  return out;
}

std::string to_string(const UniPoly& u, std::string_view var) {
  if (u.is_zero()) return "0";
  std::string out;
  bool first = true;
  const auto& c = u.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    std::string mono;
    if (k >= 1) mono = std::string(var) + (k > 1 ? "^" + std::to_string(k) : "");
    append_term(out, c[k], mono, first);
    first = false;
  }
  return out;
}

}  // namespace polycvx
