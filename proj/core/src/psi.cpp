#include <oscitab/psi.hpp>

#include <oscitab/errors.hpp>

#include <json.hpp>

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace oscitab {

namespace {

const BivariatePolynomial& var_x() {
  static const BivariatePolynomial x = BivariatePolynomial::variable_x();
  return x;
}

const BivariatePolynomial& var_y() {
  static const BivariatePolynomial y = BivariatePolynomial::variable_y();
  return y;
}

const BivariatePolynomial& x_plus_2y() {
  static const BivariatePolynomial z = var_x() + Rational(2) * var_y();
  return z;
}

}  // namespace

BivariatePolynomial psi_apply(const BivariatePolynomial& a) {
  const BivariatePolynomial one = BivariatePolynomial::constant(1);
  const BivariatePolynomial& z = x_plus_2y();
  const BivariatePolynomial z_minus_1 = z - one;
  BivariatePolynomial result = (z + one) * a.substitute(var_x(), z);
  result -= var_x() * a.substitute(var_x() - one, z_minus_1);
  result -= (Rational(2) * var_y()) * a.substitute(var_x() + one, z_minus_1);
  return result;
}

int PsiMatrix::basis_index(int r, int j, int i) {
  // blocks j = r..0, each of j+1 entries with i descending
  const int block_offset = ((r + 1) * (r + 2) - (j + 1) * (j + 2)) / 2;
  return block_offset + (j - i);
}

Monomial PsiMatrix::alpha_exponents(int r, int s) {
  int offset = 0;
  for (int j = r; j >= 0; --j) {
    if (s < offset + j + 1) {
      const int i = j - (s - offset);
      return Monomial{i, j - i};
    }
    offset += j + 1;
  }
  throw ValidationError("basis index out of range");
}

namespace detail {

std::vector<Rational> beta_coordinates(const BivariatePolynomial& b, int r) {
  if (b.degree() > r) throw ValidationError("degree exceeds the basis bound");
  // Substituting y -> (y - x)/2 rewrites b so that the plain monomial x^i y^m
  // carries the coordinate of x^i (x+2y)^m.
  static const BivariatePolynomial half_diff =
      make_rational(1, 2) * (BivariatePolynomial::variable_y() - BivariatePolynomial::variable_x());
  const BivariatePolynomial rewritten = b.substitute(var_x(), half_diff);
  std::vector<Rational> coords(static_cast<std::size_t>(PsiMatrix::dimension(r)), Rational(0));
  for (const auto& [m, c] : rewritten.terms())
    coords[static_cast<std::size_t>(PsiMatrix::basis_index(r, m.total(), m.x))] = c;
  return coords;
}

}  // namespace detail

const PsiMatrix& psi_matrix(int r) {
  if (r < 0) throw ValidationError("degree bound must be nonnegative");
  static std::mutex mutex;
  static std::map<int, PsiMatrix> cache;
  std::scoped_lock lock(mutex);
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;

  PsiMatrix m;
  m.r = r;
  m.dim = PsiMatrix::dimension(r);
  m.entries.assign(static_cast<std::size_t>(m.dim),
                   std::vector<Rational>(static_cast<std::size_t>(m.dim), Rational(0)));
  for (int s = 0; s < m.dim; ++s) {
    const Monomial exps = PsiMatrix::alpha_exponents(r, s);
    const BivariatePolynomial image =
        psi_apply(BivariatePolynomial::term(1, exps.x, exps.y));
    const std::vector<Rational> coords = detail::beta_coordinates(image, r);
    for (int t = 0; t < m.dim; ++t) m.entries[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] = coords[static_cast<std::size_t>(t)];
  }
  return cache.emplace(r, std::move(m)).first->second;
}

BivariatePolynomial psi_inverse(const BivariatePolynomial& b) {
  if (b.is_zero()) return {};
  const int r = b.degree();
  const PsiMatrix& m = psi_matrix(r);
  const std::vector<Rational> rhs = detail::beta_coordinates(b, r);
  std::vector<Rational> solution(static_cast<std::size_t>(m.dim), Rational(0));
  for (int t = 0; t < m.dim; ++t) {
    Rational acc = rhs[static_cast<std::size_t>(t)];
    for (int s = 0; s < t; ++s) {
      const Rational& entry = m.entries[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)];
      if (entry != 0 && solution[static_cast<std::size_t>(s)] != 0)
        acc -= entry * solution[static_cast<std::size_t>(s)];
    }
    solution[static_cast<std::size_t>(t)] =
        acc / m.entries[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
  }
  BivariatePolynomial result;
  for (int s = 0; s < m.dim; ++s) {
    const Rational& c = solution[static_cast<std::size_t>(s)];
    if (c == 0) continue;
    const Monomial exps = PsiMatrix::alpha_exponents(r, s);
    result += BivariatePolynomial::term(c, exps.x, exps.y);
  }
  return result;
}

BivariatePolynomial q_polynomial(const BivariatePolynomial& p) {
  return psi_inverse(p.substitute(var_x(), x_plus_2y()));
}

Rational average_weight_formula(int k, int n, const BivariatePolynomial& p) {
  if (k < 0 || n < 0) throw ValidationError("k and n must be nonnegative");
  const BivariatePolynomial q = q_polynomial(p);
  return Rational((k + 2 * n + 1) * q.evaluate(k, k + 2 * n));
}

Formula parse_formula(const std::string& id) {
  if (id == "hz") return Formula::hz;
  if (id == "wt20") return Formula::wt20;
  if (id == "wt11") return Formula::wt11;
  if (id == "empty_binom_x") return Formula::empty_binom_x;
  if (id == "binom_i") return Formula::binom_i;
  if (id == "xr_at_origin") return Formula::xr_at_origin;
  throw UnknownFormulaError("unknown formula id: " + id);
}

std::string formula_name(Formula f) {
  switch (f) {
    case Formula::hz: return "hz";
    case Formula::wt20: return "wt20";
    case Formula::wt11: return "wt11";
    case Formula::empty_binom_x: return "empty_binom_x";
    case Formula::binom_i: return "binom_i";
    case Formula::xr_at_origin: return "xr_at_origin";
  }
  throw UnknownFormulaError("unknown formula");
}

namespace {

void require_zero(int value, const char* name, const char* id) {
  if (value != 0)
    throw ValidationError(std::string(id) + " does not take parameter " + name);
}

Rational binomial_size_weight_value(int n, int r) {
  // 2^r r!^2 / (2r+1)! * C(n, r)
  Int numerator = factorial(static_cast<unsigned long>(r));
  numerator *= numerator;
  numerator <<= r;
  numerator *= binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return make_rational(numerator, factorial(static_cast<unsigned long>(2 * r + 1)));
}

}  // namespace

Rational closed_form(Formula f, int k, int n, int r) {
  if (k < 0 || n < 0 || r < 0) throw ValidationError("formula parameters must be nonnegative");
  const Int l = Int(k) + 2 * n;  // walk length
  switch (f) {
    case Formula::hz:
      require_zero(r, "r", "hz");
      return make_rational((l + 1) * (3 * Int(k) + 2 * n), 6);
    case Formula::wt20:
      require_zero(r, "r", "wt20");
      return make_rational(
          (l + 1) * (10 * Int(k) * k + 4 * Int(n) * n + 10 * Int(k) * n + 5 * k + 6 * n), 30);
    case Formula::wt11:
      require_zero(r, "r", "wt11");
      return make_rational(
          (l + 1) * (2 * Int(k) * k + 2 * Int(n) * n + 5 * Int(k) * n + k), 6);
    case Formula::empty_binom_x:
      require_zero(k, "k", "empty_binom_x");
      return binomial_size_weight_value(n, r);
    case Formula::binom_i: {
      const Int count = binomial(static_cast<unsigned long>(k + 2 * n),
                                 static_cast<unsigned long>(r));
      return make_rational((l + 1) * count, r + 1);
    }
    case Formula::xr_at_origin: {
      require_zero(k, "k", "xr_at_origin");
      const Rational expected = binomial_size_weight_value(n, r);
      const Rational via_operator =
          psi_inverse(binomial_poly(Var::x, r)).evaluate(0, 2 * n);
      if (via_operator != expected) {
        std::ostringstream os;
        os << "binomial size weight at origin disagrees for n=" << n << ", r=" << r << ": "
           << via_operator.get_str() << " vs " << expected.get_str();
        throw AssertionFailure(os.str());
      }
      return expected;
    }
  }
  throw UnknownFormulaError("unknown formula");
}

Rational hook_product_average(int r, int n) {
  if (r < 0 || n < 0) throw ValidationError("parameters must be nonnegative");
  // (2n+1) * (2r)! 2^r / ((2r+3) (r+1)!) * C(n, r+1)
  Int numerator = factorial(static_cast<unsigned long>(2 * r));
  numerator <<= r;
  numerator *= binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(r + 1));
  numerator *= 2 * n + 1;
  Int denominator = factorial(static_cast<unsigned long>(r + 1));
  denominator *= 2 * r + 3;
  return make_rational(numerator, denominator);
}

Rational content_product_average(int r, int n) {
  if (r < 0 || n < 0) throw ValidationError("parameters must be nonnegative");
  // (2n+1) * r! 2^r / ((2r+1)(2r+3)) * C(n, r+1)
  Int numerator = factorial(static_cast<unsigned long>(r));
  numerator <<= r;
  numerator *= binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(r + 1));
  numerator *= 2 * n + 1;
  const Int denominator = Int(2 * r + 1) * (2 * r + 3);
  return make_rational(numerator, denominator);
}

AsymptoticCoefficient asymptotic_coefficient(int i, int j, AsymptoticRegime regime) {
  if (i < 0 || j < 0) throw ValidationError("exponents must be nonnegative");
  const int exponent = i + j + 1;
  if (regime == AsymptoticRegime::large_size)
    return {make_rational(1, exponent), exponent};
  const Int numerator = factorial(static_cast<unsigned long>(i)) *
                        factorial(static_cast<unsigned long>(i + j));
  return {make_rational(numerator, factorial(static_cast<unsigned long>(2 * i + j + 1))),
          exponent};
}

LeadingCoefficientReport leading_coefficient_checks(int r) {
  if (r < 0) throw ValidationError("r must be nonnegative");
  LeadingCoefficientReport report;
  report.r = r;
  for (int i = 0; i <= r; ++i) {
    const BivariatePolynomial beta =
        BivariatePolynomial::term(1, i, 0) * x_plus_2y().pow(r - i);
    const BivariatePolynomial preimage = psi_inverse(beta);
    LeadingCoefficientRow row;
    row.i = i;
    row.y_power_coeff = preimage.coefficient(0, r);
    row.y_power_expected =
        make_rational(factorial(static_cast<unsigned long>(r)) *
                          factorial(static_cast<unsigned long>(i)),
                      factorial(static_cast<unsigned long>(r + i + 1)));
    row.top_degree_sum = 0;
    for (int ip = 0; ip <= i; ++ip) row.top_degree_sum += preimage.coefficient(ip, r - ip);
    row.top_degree_expected = make_rational(1, r + 1);
    if (row.y_power_coeff != row.y_power_expected ||
        row.top_degree_sum != row.top_degree_expected) {
      std::ostringstream os;
      os << "leading coefficient identity failed at r=" << r << ", i=" << i;
      throw AssertionFailure(os.str());
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string to_json_string(const PsiMatrix& m) {
  nlohmann::json basis = nlohmann::json::array();
  for (int s = 0; s < m.dim; ++s) {
    const Monomial exps = PsiMatrix::alpha_exponents(m.r, s);
    basis.push_back({{"j", exps.total()}, {"i", exps.x}});
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m.entries) {
    nlohmann::json cells = nlohmann::json::array();
    for (const Rational& entry : row) cells.push_back(entry.get_str());
    rows.push_back(std::move(cells));
  }
  return nlohmann::json{{"r", m.r},
                        {"dim", m.dim},
                        {"domain_basis", "x^i * y^(j-i)"},
                        {"image_basis", "x^i * (x+2*y)^(j-i)"},
                        {"basis", std::move(basis)},
                        {"entries", std::move(rows)}}
      .dump();
}

namespace detail {

BivariatePolynomial induction_step_poly(const BivariatePolynomial& p) {
  const BivariatePolynomial q = q_polynomial(p);
  const BivariatePolynomial one = BivariatePolynomial::constant(1);
  return (x_plus_2y() + one) * q.substitute(var_x(), x_plus_2y());
}

}  // namespace detail

}  // namespace oscitab
