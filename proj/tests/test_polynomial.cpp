#include <oscitab/errors.hpp>
#include <oscitab/polynomial.hpp>

#include <doctest.h>

#include <random>
#include <vector>

using namespace oscitab;

namespace {

const BivariatePolynomial X = BivariatePolynomial::variable_x();
const BivariatePolynomial Y = BivariatePolynomial::variable_y();

BivariatePolynomial random_poly(std::mt19937_64& engine, int max_degree) {
  BivariatePolynomial p;
  for (int i = 0; i <= max_degree; ++i)
    for (int j = 0; i + j <= max_degree; ++j) {
      if (engine() % 2) continue;
      const long num = static_cast<long>(engine() % 11) - 5;
      if (num == 0) continue;
      p += BivariatePolynomial::term(make_rational(num, 1 + static_cast<long>(engine() % 6)), i, j);
    }
  return p;
}

}  // namespace

TEST_CASE("ring operations on small inputs") {
  CHECK((X + (-X)).is_zero());
  CHECK((X + 2 * Y) * (X + 2 * Y) == X * X + 4 * (X * Y) + 4 * (Y * Y));
  CHECK(make_rational(1, 2) * (2 * X) == X);
  CHECK(BivariatePolynomial::zero() * X == BivariatePolynomial::zero());
  CHECK((X - X + Y - Y).is_zero());
}

TEST_CASE("substitute expands compositions") {
  CHECK((X * Y).substitute(X, X + 2 * Y) == X * X + 2 * (X * Y));
  CHECK(Y.substitute(X + BivariatePolynomial::constant(1),
                     Y - BivariatePolynomial::constant(1)) ==
        Y - BivariatePolynomial::constant(1));
  CHECK((X * X).substitute(X - BivariatePolynomial::constant(1), Y) ==
        X * X - 2 * X + BivariatePolynomial::constant(1));

  SUBCASE("identity substitution is the identity") {
    std::mt19937_64 engine(7);
    for (int i = 0; i < 25; ++i) {
      const BivariatePolynomial p = random_poly(engine, 5);
      CHECK(p.substitute(X, Y) == p);
    }
  }
}

TEST_CASE("evaluate is exact") {
  CHECK((X + 2 * Y).evaluate(1, 2) == 5);
  const BivariatePolynomial q = make_rational(1, 6) * (2 * X + Y);
  CHECK(q.evaluate(0, 4) == make_rational(2, 3));
  CHECK(BivariatePolynomial::zero().evaluate(17, -3) == 0);
}

TEST_CASE("degree, constant term, coefficient") {
  CHECK((X * X + Y).degree() == 2);
  CHECK(BivariatePolynomial::zero().degree() == -1);
  CHECK(BivariatePolynomial::constant(5).degree() == 0);
  CHECK(parse_polynomial("3*x^2-4*x*y-x-2*y").constant_term() == 0);
  CHECK((X * X + 2 * (X * Y)).coefficient(1, 1) == 2);
  CHECK((X * X).coefficient(0, 2) == 0);
}

TEST_CASE("binomial_poly") {
  CHECK(binomial_poly(Var::y, 0) == BivariatePolynomial::constant(1));
  CHECK(binomial_poly(Var::y, 2) == make_rational(1, 2) * (Y * Y - Y));
  CHECK(binomial_poly(Var::x, 1) == X);
  // column sums of Pascal's triangle at integer points
  for (int r = 0; r <= 5; ++r) {
    const BivariatePolynomial p = binomial_poly(Var::x, r);
    for (int v = 0; v <= 9; ++v)
      CHECK(p.evaluate(v, 0) ==
            binomial(static_cast<unsigned long>(v), static_cast<unsigned long>(r)));
  }
}

TEST_CASE("ring axioms hold exactly on random polynomials") {
  std::mt19937_64 engine(11);
  for (int i = 0; i < 30; ++i) {
    const BivariatePolynomial a = random_poly(engine, 4);
    const BivariatePolynomial b = random_poly(engine, 4);
    const BivariatePolynomial c = random_poly(engine, 4);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    for (const auto& [m, coeff] : (a * b + c).terms()) {
      CHECK(coeff != 0);
      Int gcd;
      mpz_gcd(gcd.get_mpz_t(), coeff.get_num().get_mpz_t(), coeff.get_den().get_mpz_t());
      CHECK(gcd == 1);
      CHECK(coeff.get_den() > 0);
    }
  }
}

TEST_CASE("text form") {
  SUBCASE("printing follows the graded order") {
    CHECK(to_text(BivariatePolynomial::zero()) == "0");
    CHECK(to_text(X) == "x");
    CHECK(to_text(-(X * X) + Y) == "-x^2 + y");
    CHECK(to_text(parse_polynomial("3*x^2-4*x*y-x-2*y")) == "3*x^2 - 4*x*y - x - 2*y");
    CHECK(to_text(X - BivariatePolynomial::constant(1)) == "x - 1");
    CHECK(to_text(BivariatePolynomial::constant(make_rational(-1, 4))) == "-1/4");
  }

  SUBCASE("parsing accepts the session grammar") {
    CHECK(parse_polynomial("x^2 + 2*x*y") == X * X + 2 * (X * Y));
    CHECK(parse_polynomial("x^2+2*x*y") == X * X + 2 * (X * Y));
    CHECK(parse_polynomial("1/4*x*y + 1/12*y^2 + 1/6*x") ==
          make_rational(1, 4) * (X * Y) + make_rational(1, 12) * (Y * Y) +
              make_rational(1, 6) * X);
    CHECK(parse_polynomial("-x") == -X);
    CHECK(parse_polynomial("7") == BivariatePolynomial::constant(7));
    CHECK(parse_polynomial("x*x*y") == (X * X) * Y);
    CHECK(parse_polynomial(" x ^ 2 ") == X * X);
  }

  SUBCASE("round trip is the identity") {
    std::mt19937_64 engine(13);
    for (int i = 0; i < 40; ++i) {
      const BivariatePolynomial p = random_poly(engine, 6);
      CHECK(parse_polynomial(to_text(p)) == p);
    }
  }

  SUBCASE("malformed input is rejected") {
    CHECK_THROWS_AS(parse_polynomial(""), ValidationError);
    CHECK_THROWS_AS(parse_polynomial("2x"), ValidationError);
    CHECK_THROWS_AS(parse_polynomial("x^"), ValidationError);
    CHECK_THROWS_AS(parse_polynomial("x+"), ValidationError);
    CHECK_THROWS_AS(parse_polynomial("z"), ValidationError);
    CHECK_THROWS_AS(parse_polynomial("x**y"), ValidationError);
    CHECK_THROWS_AS(parse_polynomial("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_polynomial("x^-1"), ValidationError);
  }
}

TEST_CASE("JSON form") {
  const BivariatePolynomial p =
      make_rational(1, 4) * (X * Y) + make_rational(1, 12) * (Y * Y) + make_rational(1, 6) * X;
  CHECK(to_json_string(p) ==
        R"({"terms":[{"den":"4","i":1,"j":1,"num":"1"},{"den":"12","i":0,"j":2,"num":"1"},{"den":"6","i":1,"j":0,"num":"1"}]})");
  CHECK(polynomial_from_json(to_json_string(p)) == p);
  CHECK(polynomial_from_json(R"({"terms":[]})") == BivariatePolynomial::zero());
  // duplicate exponent pairs accumulate, zeros vanish
  CHECK(polynomial_from_json(
            R"({"terms":[{"i":1,"j":0,"num":"1","den":"1"},{"i":1,"j":0,"num":"-1","den":"1"}]})")
            .is_zero());

  std::mt19937_64 engine(17);
  for (int i = 0; i < 25; ++i) {
    const BivariatePolynomial q = random_poly(engine, 6);
    CHECK(polynomial_from_json(to_json_string(q)) == q);
  }

  CHECK_THROWS_AS(polynomial_from_json("[]"), ValidationError);
  CHECK_THROWS_AS(polynomial_from_json(R"({"terms":[{"i":-1,"j":0,"num":"1","den":"1"}]})"),
                  ValidationError);
  CHECK_THROWS_AS(polynomial_from_json(R"({"terms":[{"i":0,"j":0,"num":"x","den":"1"}]})"),
                  ValidationError);
  CHECK_THROWS_AS(polynomial_from_json(R"({"terms":[{"i":0,"j":0,"num":"1","den":"0"}]})"),
                  ValidationError);
}
