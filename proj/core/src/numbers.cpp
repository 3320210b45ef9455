#include <oscitab/numbers.hpp>

#include <oscitab/errors.hpp>

namespace oscitab {

Int factorial(unsigned long n) {
  Int result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Int double_factorial(long n) {
  if (n < -1) throw ValidationError("double_factorial requires n >= -1");
  if (n <= 0) return 1;
  Int result;
  mpz_2fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Int binomial(unsigned long n, unsigned long k) {
  Int result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_pow(const Rational& base, unsigned long exp) {
  Rational result;
  mpz_pow_ui(mpq_numref(result.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
  mpz_pow_ui(mpq_denref(result.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
  return result;  // canonical input stays canonical under powers
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Int(text));
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw ValidationError("malformed rational: " + text);
  }
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Int& value) { return value.get_str(); }

}  // namespace oscitab
