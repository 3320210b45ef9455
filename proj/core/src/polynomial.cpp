#include <oscitab/polynomial.hpp>

#include <oscitab/errors.hpp>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <vector>

namespace oscitab {

void BivariatePolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivariatePolynomial BivariatePolynomial::constant(const Rational& c) {
  return term(c, 0, 0);
}

BivariatePolynomial BivariatePolynomial::variable_x() { return term(1, 1, 0); }

BivariatePolynomial BivariatePolynomial::variable_y() { return term(1, 0, 1); }

BivariatePolynomial BivariatePolynomial::term(const Rational& c, int x_exp, int y_exp) {
  if (x_exp < 0 || y_exp < 0) throw ValidationError("negative exponent");
  BivariatePolynomial p;
  p.add_term(Monomial{x_exp, y_exp}, c);
  return p;
}

int BivariatePolynomial::degree() const {
  // first term has maximal total degree under the graded order
  return terms_.empty() ? -1 : terms_.begin()->first.total();
}

Rational BivariatePolynomial::coefficient(int x_exp, int y_exp) const {
  auto it = terms_.find(Monomial{x_exp, y_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, Rational(-c));
  return *this;
}

BivariatePolynomial BivariatePolynomial::operator-() const {
  BivariatePolynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, Rational(-c));
  return out;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      out.add_term(Monomial{ma.x + mb.x, ma.y + mb.y}, Rational(ca * cb));
  return out;
}

BivariatePolynomial operator*(const Rational& c, const BivariatePolynomial& p) {
  if (c == 0) return {};
  BivariatePolynomial out;
  for (const auto& [m, coeff] : p.terms_) out.terms_.emplace(m, Rational(c * coeff));
  return out;
}

BivariatePolynomial BivariatePolynomial::pow(int exponent) const {
  if (exponent < 0) throw ValidationError("negative polynomial power");
  BivariatePolynomial result = constant(1);
  for (int e = 0; e < exponent; ++e) result = result * *this;
  return result;
}

BivariatePolynomial BivariatePolynomial::substitute(const BivariatePolynomial& ex,
                                                    const BivariatePolynomial& ey) const {
  int max_x = 0, max_y = 0;
  for (const auto& [m, c] : terms_) {
    max_x = std::max(max_x, m.x);
    max_y = std::max(max_y, m.y);
  }
  std::vector<BivariatePolynomial> x_pows(static_cast<std::size_t>(max_x) + 1);
  std::vector<BivariatePolynomial> y_pows(static_cast<std::size_t>(max_y) + 1);
  x_pows[0] = constant(1);
  y_pows[0] = constant(1);
  for (int e = 1; e <= max_x; ++e) x_pows[e] = x_pows[e - 1] * ex;
  for (int e = 1; e <= max_y; ++e) y_pows[e] = y_pows[e - 1] * ey;
  BivariatePolynomial out;
  for (const auto& [m, c] : terms_) out += c * (x_pows[m.x] * y_pows[m.y]);
  return out;
}

Rational BivariatePolynomial::evaluate(const Rational& x0, const Rational& y0) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_)
    sum += c * rational_pow(x0, static_cast<unsigned long>(m.x)) *
           rational_pow(y0, static_cast<unsigned long>(m.y));
  return sum;
}

BivariatePolynomial binomial_poly(Var v, int r) {
  if (r < 0) throw ValidationError("binomial_poly requires r >= 0");
  const BivariatePolynomial var = v == Var::x ? BivariatePolynomial::variable_x()
                                              : BivariatePolynomial::variable_y();
  BivariatePolynomial numerator = BivariatePolynomial::constant(1);
  for (int m = 0; m < r; ++m)
    numerator = numerator * (var - BivariatePolynomial::constant(m));
  return make_rational(1, factorial(static_cast<unsigned long>(r))) * numerator;
}

std::string to_text(const BivariatePolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    const bool has_vars = m.x > 0 || m.y > 0;
    if (!has_vars || magnitude != 1) {
      os << magnitude.get_str();
      if (has_vars) os << '*';
    }
    if (m.x > 0) {
      os << 'x';
      if (m.x > 1) os << '^' << m.x;
      if (m.y > 0) os << '*';
    }
    if (m.y > 0) {
      os << 'y';
      if (m.y > 1) os << '^' << m.y;
    }
  }
  return os.str();
}

namespace {

// Recursive-descent parser for the text grammar: signed terms of '*'-joined
// factors, each factor a rational literal or x/y with an optional '^' power.
class PolynomialParser {
 public:
  explicit PolynomialParser(const std::string& text) : text_(text) {}

  BivariatePolynomial parse() {
    BivariatePolynomial result;
    skip_space();
    if (at_end()) throw error("empty polynomial");
    bool negative = consume_sign();
    while (true) {
      result += parse_term(negative);
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        negative = c == '-';
        skip_space();
        if (at_end()) throw error("dangling sign");
      } else {
        throw error(std::string("unexpected character '") + c + "'");
      }
    }
    return result;
  }

 private:
  BivariatePolynomial parse_term(bool negative) {
    Rational coeff = negative ? -1 : 1;
    int x_exp = 0, y_exp = 0;
    while (true) {
      parse_factor(coeff, x_exp, y_exp);
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
      } else {
        break;
      }
    }
    return BivariatePolynomial::term(coeff, x_exp, y_exp);
  }

  void parse_factor(Rational& coeff, int& x_exp, int& y_exp) {
    skip_space();
    if (at_end()) throw error("expected factor");
    const char c = peek();
    if (c == 'x' || c == 'y') {
      ++pos_;
      int exp = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        exp = parse_integer();
      }
      (c == 'x' ? x_exp : y_exp) += exp;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      Int numerator(parse_digits());
      skip_space();
      if (!at_end() && peek() == '/') {
        ++pos_;
        Int denominator(parse_digits());
        coeff *= make_rational(numerator, denominator);
      } else {
        coeff *= Rational(numerator);
      }
    } else {
      throw error(std::string("unexpected character '") + c + "'");
    }
  }

  int parse_integer() {
    const std::string digits = parse_digits();
    if (digits.size() > 6) throw error("exponent too large");
    return std::stoi(digits);
  }

  std::string parse_digits() {
    skip_space();
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
    if (digits.empty()) throw error("expected number");
    return digits;
  }

  bool consume_sign() {
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      const bool negative = peek() == '-';
      ++pos_;
      skip_space();
      return negative;
    }
    return false;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  ValidationError error(const std::string& message) const {
    return ValidationError("polynomial text: " + message + " at position " +
                           std::to_string(pos_));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

BivariatePolynomial parse_polynomial(const std::string& text) {
  return PolynomialParser(text).parse();
}

std::string to_json_string(const BivariatePolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back({{"i", m.x},
                     {"j", m.y},
                     {"num", Int(c.get_num()).get_str()},
                     {"den", Int(c.get_den()).get_str()}});
  }
  return nlohmann::json{{"terms", std::move(terms)}}.dump();
}

BivariatePolynomial polynomial_from_json(const std::string& text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad polynomial JSON: ") + e.what());
  }
  if (!parsed.is_object() || !parsed.contains("terms") || !parsed["terms"].is_array())
    throw ValidationError("polynomial JSON must be {\"terms\": [...]}");
  BivariatePolynomial result;
  for (const auto& entry : parsed["terms"]) {
    if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
        !entry.contains("num") || !entry.contains("den") ||
        !entry["i"].is_number_integer() || !entry["j"].is_number_integer() ||
        !entry["num"].is_string() || !entry["den"].is_string())
      throw ValidationError("polynomial JSON term must be {i, j, num, den}");
    const int i = entry["i"].get<int>();
    const int j = entry["j"].get<int>();
    if (i < 0 || j < 0) throw ValidationError("polynomial JSON exponents must be nonnegative");
    Rational coeff;
    try {
      coeff = make_rational(Int(entry["num"].get<std::string>()),
                            Int(entry["den"].get<std::string>()));
    } catch (const std::invalid_argument&) {
      throw ValidationError("polynomial JSON coefficients must be decimal strings");
    }
    result += BivariatePolynomial::term(coeff, i, j);
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const BivariatePolynomial& p) {
  return os << to_text(p);
}

}  // namespace oscitab
