#pragma once

#include <oscitab/polynomial.hpp>

#include <string>
#include <vector>

namespace oscitab {

/// The linear operator at the heart of the library:
///
///   Psi(A)(x, y) = (x+2y+1) A(x, x+2y) - x A(x-1, x+2y-1) - 2y A(x+1, x+2y-1)
///
/// It preserves total degree and constant term, and restricts to a bijection
/// on polynomials of total degree at most r for every r. Averages of
/// step-weight sums over oscillating tableaux are governed by its inverse:
/// see q_polynomial and average_weight_formula below.
BivariatePolynomial psi_apply(const BivariatePolynomial& a);

/// Matrix of psi_apply on polynomials of total degree <= r.
///
/// Domain basis ("alpha"): x^i y^(j-i). Image basis ("beta"): x^i (x+2y)^(j-i).
/// Both are listed with j = r down to 0 and, inside each degree block, i = j
/// down to 0; basis_index maps (j, i) to the position. In these bases the
/// matrix is lower triangular with diagonal entry j+i+1 at (j, i), so it is
/// invertible by forward substitution.
struct PsiMatrix {
  int r = 0;
  int dim = 0;
  std::vector<std::vector<Rational>> entries;  // entries[row][col]

  static int dimension(int r) { return (r + 1) * (r + 2) / 2; }
  static int basis_index(int r, int j, int i);
  /// Exponents (i, j-i) of the basis element at position s.
  static Monomial alpha_exponents(int r, int s);
};

/// The matrix for degree bound r; cached, safe to call from multiple threads.
const PsiMatrix& psi_matrix(int r);

/// The unique preimage of b under psi_apply within polynomials of degree
/// deg(b); same total degree and constant term as b. Zero maps to zero.
BivariatePolynomial psi_inverse(const BivariatePolynomial& b);

/// Q = psi_inverse(P(x, x+2y)): the polynomial, of the same degree and
/// constant term as P, for which (k+2n+1) * Q(k, k+2n) is the exact average
/// over all oscillating tableaux of length k+2n ending at any shape of size k
/// of the weight sum of P(step size, position).
BivariatePolynomial q_polynomial(const BivariatePolynomial& p);

/// (k+2n+1) * Q(k, k+2n), the exact average weight described above.
Rational average_weight_formula(int k, int n, const BivariatePolynomial& p);

/// Named closed forms for specific weight averages. Parameters not used by a
/// formula must be zero.
///
///   hz            average of the size weight: (k+2n+1)(3k+2n)/6
///   wt20          average of size^2: (k+2n+1)(10k^2+4n^2+10kn+5k+6n)/30
///   wt11          average of size*position: (k+2n+1)(2k^2+2n^2+5kn+k)/6
///   empty_binom_x normalized sum of C(size, r) at the empty shape:
///                 2^r r!^2 / (2r+1)! * C(n, r)
///   binom_i       average of C(position, r): (k+2n+1) C(k+2n, r) / (r+1)
///   xr_at_origin  the empty_binom_x value, recomputed as
///                 psi_inverse(C(x, r)) evaluated at (0, 2n); throws
///                 AssertionFailure if the two routes disagree
enum class Formula { hz, wt20, wt11, empty_binom_x, binom_i, xr_at_origin };

/// Throws UnknownFormulaError for ids other than the six above.
Formula parse_formula(const std::string& id);
std::string formula_name(Formula f);

Rational closed_form(Formula f, int k, int n, int r);

/// Exact average of the hook/content box-product weight of parameter r over
/// closed walks of length 2n (empty ending shape).
Rational hook_product_average(int r, int n);
Rational content_product_average(int r, int n);

enum class AsymptoticRegime { large_size, large_length };

struct AsymptoticCoefficient {
  Rational coefficient;
  int exponent = 0;
};

/// Leading term of the average of the size^i * position^j weight:
/// for large shape size s the average grows like s^(i+j+1)/(i+j+1); for large
/// length (fixed shape, n -> infinity) like i!(i+j)!/(2i+j+1)! * (2n)^(i+j+1).
AsymptoticCoefficient asymptotic_coefficient(int i, int j, AsymptoticRegime regime);

struct LeadingCoefficientRow {
  int i = 0;
  Rational y_power_coeff;        // coefficient of y^r in psi_inverse(x^i (x+2y)^(r-i))
  Rational y_power_expected;     // r! i! / (r+i+1)!
  Rational top_degree_sum;       // sum of the degree-r coefficients of the preimage
  Rational top_degree_expected;  // 1/(r+1)
};

struct LeadingCoefficientReport {
  int r = 0;
  std::vector<LeadingCoefficientRow> rows;
};

/// For every 0 <= i <= r, inverts x^i (x+2y)^(r-i) and checks both leading
/// coefficient identities above exactly. Throws AssertionFailure naming the
/// failing (r, i) pair; returns the table of computed values otherwise.
LeadingCoefficientReport leading_coefficient_checks(int r);

/// Row-major matrix serialization; the basis order is spelled out in the
/// payload as the (j, i) index pairs described on PsiMatrix.
std::string to_json_string(const PsiMatrix& m);

namespace detail {

/// Coordinates of b in the beta basis x^i (x+2y)^(j-i) of degree bound r,
/// in basis order. Requires deg(b) <= r.
std::vector<Rational> beta_coordinates(const BivariatePolynomial& b, int r);

/// A = (x+2y+1) Q(x, x+2y) for Q = q_polynomial(p). Satisfies
/// (x+2y) p(x, x+2y) = (x+2y) A(x,y) - x A(x-1,y) - 2y A(x+1,y-1),
/// the recurrence that propagates the average over one walk step.
BivariatePolynomial induction_step_poly(const BivariatePolynomial& p);

}  // namespace detail

}  // namespace oscitab
