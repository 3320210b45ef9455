#pragma once

#include <oscitab/numbers.hpp>

#include <iosfwd>
#include <map>
#include <string>

namespace oscitab {

struct Monomial {
  int x = 0;
  int y = 0;
  int total() const { return x + y; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Term order used everywhere terms are enumerated, printed or serialized:
/// higher total degree first, then higher x exponent.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.x > b.x;
  }
};

/// Sparse polynomial in x and y with exact rational coefficients.
///
/// Canonical form: no stored coefficient is zero, every coefficient is in
/// lowest terms, and the zero polynomial has an empty term map. Equality of
/// polynomials is equality of term maps. Values are immutable from the
/// caller's point of view; all operations return new polynomials.
class BivariatePolynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  BivariatePolynomial() = default;

  static BivariatePolynomial zero() { return {}; }
  static BivariatePolynomial constant(const Rational& c);
  static BivariatePolynomial variable_x();
  static BivariatePolynomial variable_y();
  static BivariatePolynomial term(const Rational& c, int x_exp, int y_exp);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 stands in for the degree of the zero polynomial.
  int degree() const;
  Rational coefficient(int x_exp, int y_exp) const;
  Rational constant_term() const { return coefficient(0, 0); }

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  BivariatePolynomial& operator-=(const BivariatePolynomial& other);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
    a += b;
    return a;
  }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
    a -= b;
    return a;
  }
  BivariatePolynomial operator-() const;
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(const Rational& c, const BivariatePolynomial& p);
  friend BivariatePolynomial operator*(const BivariatePolynomial& p, const Rational& c) {
    return c * p;
  }

  BivariatePolynomial pow(int exponent) const;

  /// Simultaneous substitution x -> ex, y -> ey, expanded to canonical form.
  BivariatePolynomial substitute(const BivariatePolynomial& ex, const BivariatePolynomial& ey) const;

  Rational evaluate(const Rational& x0, const Rational& y0) const;

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

enum class Var { x, y };

/// The binomial coefficient C(v, r) expanded as a degree-r polynomial in the
/// chosen variable: v(v-1)...(v-r+1)/r!.
BivariatePolynomial binomial_poly(Var v, int r);

/// Text form accepted and produced by the library: rational coefficients,
/// explicit '*', '^' for powers, variables exactly x and y, whitespace
/// insignificant. Examples: "x^2 + 2*x*y", "1/4*x*y + 1/12*y^2 + 1/6*x".
std::string to_text(const BivariatePolynomial& p);
BivariatePolynomial parse_polynomial(const std::string& text);

/// {"terms":[{"i":int,"j":int,"num":"...","den":"..."}]} with i the x
/// exponent; coefficients as decimal strings.
std::string to_json_string(const BivariatePolynomial& p);
BivariatePolynomial polynomial_from_json(const std::string& text);

std::ostream& operator<<(std::ostream& os, const BivariatePolynomial& p);

}  // namespace oscitab
