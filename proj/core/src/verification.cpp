#include <oscitab/verification.hpp>

#include <oscitab/errors.hpp>
#include <oscitab/partition.hpp>
#include <oscitab/polynomial.hpp>
#include <oscitab/psi.hpp>
#include <oscitab/tableau.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

namespace oscitab {

namespace {

std::vector<Partition> shapes_up_to(int max_size) {
  std::vector<Partition> shapes;
  for (int size = 0; size <= max_size; ++size)
    for (const Partition& shape : partitions_of_size(size)) shapes.push_back(shape);
  return shapes;
}

CheckResult pass(std::string name, std::string detail) {
  return CheckResult{std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
  return CheckResult{std::move(name), false, std::move(detail)};
}

std::string describe(const Partition& shape) { return to_json_string(shape); }

}  // namespace

CheckResult check_counting_consistency(int max_size, int max_extra_length, int workers) {
  const std::string name = "counting-closed-form-vs-enumeration";
  long cases = 0;
  Int total = 0;
  for (const Partition& shape : shapes_up_to(max_size)) {
    const int k = shape.size();
    for (int length = 0; length <= k + max_extra_length; ++length) {
      const Int closed = count_oscillating(shape, length);
      const Int dp = count_oscillating_dp(shape, length);
      const Int enumerated = weight_sums(shape, length, {}, workers).count;
      if (closed != dp || closed != enumerated) {
        std::ostringstream os;
        os << "mismatch at shape " << describe(shape) << ", length " << length << ": closed "
           << closed.get_str() << ", dp " << dp.get_str() << ", enumerated "
           << enumerated.get_str();
        return fail(name, os.str());
      }
      const bool should_be_empty = length < k || (length - k) % 2 != 0;
      if (should_be_empty != (closed == 0)) {
        std::ostringstream os;
        os << "parity rule violated at shape " << describe(shape) << ", length " << length;
        return fail(name, os.str());
      }
      ++cases;
      total += enumerated;
    }
  }
  std::ostringstream os;
  os << cases << " (shape, length) pairs, " << total.get_str() << " tableaux enumerated";
  return pass(name, os.str());
}

CheckResult check_neighbor_count_ratios(int max_size, int max_n) {
  const std::string name = "neighbor-count-ratios";
  long cases = 0;
  for (int size = 1; size <= max_size; ++size) {
    for (const Partition& shape : partitions_of_size(size)) {
      for (int n = 0; n <= max_n; ++n) {
        const int length = size + 2 * n;
        const Int denominator = count_oscillating(shape, length);
        Int up_sum = 0, down_sum = 0;
        for (const Partition& up : up_neighbors(shape))
          up_sum += count_oscillating(up, length - 1);
        for (const Partition& down : down_neighbors(shape))
          down_sum += count_oscillating(down, length - 1);
        const Rational up_ratio = make_rational(up_sum, denominator);
        const Rational down_ratio = make_rational(down_sum, denominator);
        if (up_ratio != make_rational(2 * n, length) ||
            down_ratio != make_rational(size, length)) {
          std::ostringstream os;
          os << "ratio mismatch at shape " << describe(shape) << ", n=" << n;
          return fail(name, os.str());
        }
        ++cases;
      }
    }
  }
  return pass(name, std::to_string(cases) + " (shape, n) pairs");
}

CheckResult check_closed_form_averages(int max_size, int max_n) {
  const std::string name = "quadratic-weight-averages";
  const BivariatePolynomial x = BivariatePolynomial::variable_x();
  const BivariatePolynomial y = BivariatePolynomial::variable_y();
  const std::vector<std::pair<Formula, BivariatePolynomial>> forms = {
      {Formula::hz, x},
      {Formula::wt20, x * x},
      {Formula::wt11, x * y},
  };
  std::vector<StepWeight> weights;
  weights.reserve(forms.size());
  for (const auto& [formula, poly] : forms) weights.push_back(polynomial_step_weight(poly));
  long cases = 0;
  for (const Partition& shape : shapes_up_to(max_size)) {
    const int k = shape.size();
    for (int n = 0; n <= max_n; ++n) {
      const int length = k + 2 * n;
      const WeightSums sums = weight_sums(shape, length, weights, 1);
      for (std::size_t f = 0; f < forms.size(); ++f) {
        const Rational brute = Rational(sums.sums[f] / Rational(sums.count));
        const Rational closed = closed_form(forms[f].first, k, n, 0);
        const Rational operator_route = average_weight_formula(k, n, forms[f].second);
        if (brute != closed || brute != operator_route) {
          std::ostringstream os;
          os << formula_name(forms[f].first) << " mismatch at shape " << describe(shape)
             << ", n=" << n << ": brute " << brute.get_str() << ", closed form "
             << closed.get_str() << ", operator " << operator_route.get_str();
          return fail(name, os.str());
        }
        ++cases;
      }
    }
  }
  return pass(name, std::to_string(cases) + " exact average comparisons");
}

CheckResult check_monomial_average_identity(int max_size, int max_n, int max_total_degree) {
  const std::string name = "monomial-average-identity";
  std::vector<BivariatePolynomial> monomials;
  for (int a = 0; a <= max_total_degree; ++a)
    for (int b = 0; a + b <= max_total_degree; ++b)
      monomials.push_back(BivariatePolynomial::term(1, a, b));
  std::vector<StepWeight> weights;
  weights.reserve(monomials.size());
  for (const auto& p : monomials) weights.push_back(polynomial_step_weight(p));
  long cases = 0;
  for (const Partition& shape : shapes_up_to(max_size)) {
    const int k = shape.size();
    for (int n = 0; n <= max_n; ++n) {
      const WeightSums sums = weight_sums(shape, k + 2 * n, weights, 1);
      for (std::size_t w = 0; w < monomials.size(); ++w) {
        const Rational brute = Rational(sums.sums[w] / Rational(sums.count));
        const Rational formula = average_weight_formula(k, n, monomials[w]);
        if (brute != formula) {
          std::ostringstream os;
          os << "average of " << to_text(monomials[w]) << " mismatch at shape "
             << describe(shape) << ", n=" << n << ": brute " << brute.get_str()
             << ", formula " << formula.get_str();
          return fail(name, os.str());
        }
        ++cases;
      }
    }
  }
  return pass(name, std::to_string(cases) + " monomial averages");
}

CheckResult check_empty_shape_binomial_size_weight(int max_r, int max_n) {
  const std::string name = "empty-shape-binomial-size-weight";
  std::vector<StepWeight> weights;
  for (int r = 0; r <= max_r; ++r)
    weights.push_back(polynomial_step_weight(binomial_poly(Var::x, r)));
  long cases = 0;
  for (int n = 0; n <= max_n; ++n) {
    const WeightSums sums = weight_sums(Partition{}, 2 * n, weights, 1);
    // normalization 2^n n! / (2n+1)! equals 1 / (2n+1)!!
    const Rational normalizer = make_rational(1, double_factorial(2L * n + 1));
    for (int r = 0; r <= max_r; ++r) {
      const Rational normalized = Rational(sums.sums[static_cast<std::size_t>(r)] * normalizer);
      const Rational closed = closed_form(Formula::empty_binom_x, 0, n, r);
      if (normalized != closed) {
        std::ostringstream os;
        os << "mismatch at n=" << n << ", r=" << r << ": brute " << normalized.get_str()
           << ", closed form " << closed.get_str();
        return fail(name, os.str());
      }
      ++cases;
    }
  }
  return pass(name, std::to_string(cases) + " normalized sums");
}

CheckResult check_position_binomial_weight(int max_size, int max_n, int max_r) {
  const std::string name = "position-binomial-weight";
  std::vector<StepWeight> weights;
  std::vector<BivariatePolynomial> polys;
  for (int r = 0; r <= max_r; ++r) {
    polys.push_back(binomial_poly(Var::y, r));
    weights.push_back(polynomial_step_weight(polys.back()));
  }
  long cases = 0;
  for (const Partition& shape : shapes_up_to(max_size)) {
    const int k = shape.size();
    for (int n = 0; n <= max_n; ++n) {
      const WeightSums sums = weight_sums(shape, k + 2 * n, weights, 1);
      for (int r = 0; r <= max_r; ++r) {
        const Rational brute =
            Rational(sums.sums[static_cast<std::size_t>(r)] / Rational(sums.count));
        const Rational closed = closed_form(Formula::binom_i, k, n, r);
        const Rational operator_route =
            average_weight_formula(k, n, polys[static_cast<std::size_t>(r)]);
        if (brute != closed || brute != operator_route) {
          std::ostringstream os;
          os << "mismatch at shape " << describe(shape) << ", n=" << n << ", r=" << r;
          return fail(name, os.str());
        }
        ++cases;
      }
    }
  }
  return pass(name, std::to_string(cases) + " position-binomial averages");
}

CheckResult check_operator_golden_values() {
  const std::string name = "operator-golden-values";
  const BivariatePolynomial x = BivariatePolynomial::variable_x();
  const BivariatePolynomial y = BivariatePolynomial::variable_y();
  const std::vector<std::pair<BivariatePolynomial, std::string>> images = {
      {x, "2*x - 2*y"},
      {y, "2*x + 4*y"},
      {x * y, "3*x^2 + 4*x*y - 4*y^2 - x + 2*y"},
      {x * x, "3*x^2 - 4*x*y - x - 2*y"},
      {y * y, "3*x^2 + 12*x*y + 12*y^2 - x - 2*y"},
  };
  for (const auto& [input, expected] : images) {
    const BivariatePolynomial image = psi_apply(input);
    if (image != parse_polynomial(expected) || to_text(image) != expected)
      return fail(name, "image of " + to_text(input) + " is " + to_text(image) +
                            ", expected " + expected);
  }

  static const int golden[6][6] = {
      {5, 0, 0, 0, 0, 0},  {-2, 4, 0, 0, 0, 0}, {0, -1, 3, 0, 0, 0},
      {0, -2, 0, 3, 0, 0}, {-1, 1, -1, -1, 2, 0}, {0, 0, 0, 0, 0, 1},
  };
  const PsiMatrix& m2 = psi_matrix(2);
  if (m2.dim != 6) return fail(name, "degree-2 matrix has wrong dimension");
  for (int row = 0; row < 6; ++row)
    for (int col = 0; col < 6; ++col)
      if (m2.entries[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] !=
          golden[row][col]) {
        std::ostringstream os;
        os << "degree-2 matrix entry (" << row << "," << col << ") is "
           << m2.entries[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)].get_str();
        return fail(name, os.str());
      }

  const std::string inverse_text = to_text(psi_inverse(parse_polynomial("x^2+2*x*y")));
  if (inverse_text != "1/4*x*y + 1/12*y^2 + 1/6*x")
    return fail(name, "preimage of x^2+2*x*y printed as " + inverse_text);

  const BivariatePolynomial x2_preimage = psi_inverse(x * x);
  const BivariatePolynomial expected_x2 = make_rational(1, 30) *
      parse_polynomial("6*x^2 + 3*x*y + y^2 + 2*x + 3*y");
  if (x2_preimage != expected_x2)
    return fail(name, "preimage of x^2 is " + to_text(x2_preimage));

  for (int r = 0; r <= 4; ++r) {
    const BivariatePolynomial binom_y = binomial_poly(Var::y, r);
    const BivariatePolynomial z_binom = binom_y.substitute(
        x, x + Rational(2) * y);  // C(x+2y, r)
    if (psi_apply(binom_y) != Rational(r + 1) * z_binom)
      return fail(name, "binomial image identity failed at r=" + std::to_string(r));
    if (psi_inverse(z_binom) != make_rational(1, r + 1) * binom_y)
      return fail(name, "binomial preimage identity failed at r=" + std::to_string(r));
  }
  return pass(name, "operator images, degree-2 matrix, and binomial identities");
}

namespace {

BivariatePolynomial random_polynomial(std::mt19937_64& engine, int max_degree) {
  BivariatePolynomial p;
  for (int i = 0; i <= max_degree; ++i) {
    for (int j = 0; i + j <= max_degree; ++j) {
      if (engine() % 3 != 0) continue;
      const long numerator = static_cast<long>(engine() % 19) - 9;
      const long denominator = 1 + static_cast<long>(engine() % 9);
      if (numerator == 0) continue;
      p += BivariatePolynomial::term(make_rational(numerator, denominator), i, j);
    }
  }
  return p;
}

}  // namespace

CheckResult check_operator_bijectivity(int samples, int max_degree, std::uint64_t seed) {
  const std::string name = "operator-bijectivity";
  std::mt19937_64 engine(seed);
  BivariatePolynomial previous;
  for (int sample = 0; sample < samples; ++sample) {
    const BivariatePolynomial p = random_polynomial(engine, max_degree);
    const BivariatePolynomial image = psi_apply(p);
    if (psi_inverse(image) != p)
      return fail(name, "round trip failed at sample " + std::to_string(sample));
    if (psi_apply(psi_inverse(p)) != p)
      return fail(name, "reverse round trip failed at sample " + std::to_string(sample));
    if (image.degree() != p.degree() || image.constant_term() != p.constant_term())
      return fail(name, "degree or constant term not preserved at sample " +
                            std::to_string(sample));
    const BivariatePolynomial q = q_polynomial(p);
    if (q.degree() != p.degree() || q.constant_term() != p.constant_term())
      return fail(name, "q-polynomial shape mismatch at sample " + std::to_string(sample));
    // linearity against the previous sample with random rational scalars
    const Rational a = make_rational(static_cast<long>(engine() % 19) - 9,
                                     1 + static_cast<long>(engine() % 9));
    const Rational b = make_rational(static_cast<long>(engine() % 19) - 9,
                                     1 + static_cast<long>(engine() % 9));
    if (psi_apply(a * p + b * previous) != a * psi_apply(p) + b * psi_apply(previous))
      return fail(name, "linearity failed at sample " + std::to_string(sample));
    previous = p;
  }
  return pass(name, std::to_string(samples) + " random polynomials of degree <= " +
                        std::to_string(max_degree));
}

CheckResult check_leading_coefficients(int max_r) {
  const std::string name = "operator-leading-coefficients";
  long rows = 0;
  for (int r = 0; r <= max_r; ++r) {
    try {
      rows += static_cast<long>(leading_coefficient_checks(r).rows.size());
    } catch (const AssertionFailure& e) {
      return fail(name, e.what());
    }
    // structural expectations: lower triangular, diagonal entry j+i+1
    const PsiMatrix& m = psi_matrix(r);
    for (int row = 0; row < m.dim; ++row) {
      for (int col = row + 1; col < m.dim; ++col)
        if (m.entries[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0)
          return fail(name, "matrix not lower triangular at r=" + std::to_string(r));
      const Monomial exps = PsiMatrix::alpha_exponents(r, row);
      if (m.entries[static_cast<std::size_t>(row)][static_cast<std::size_t>(row)] !=
          exps.total() + exps.x + 1)
        return fail(name, "unexpected diagonal at r=" + std::to_string(r));
    }
  }
  return pass(name, std::to_string(rows) + " coefficient identities");
}

CheckResult check_asymptotic_ratios() {
  const std::string name = "asymptotic-ratio";
  const std::vector<std::pair<int, int>> exponents = {{1, 0}, {0, 1}, {1, 1}, {2, 0}};
  const int scale = 500;
  const Rational tolerance = make_rational(1, 20);
  for (const auto& [i, j] : exponents) {
    const BivariatePolynomial weight_poly = BivariatePolynomial::term(1, i, j);

    const auto [length_coeff, length_exp] =
        asymptotic_coefficient(i, j, AsymptoticRegime::large_length);
    const Rational length_avg = average_weight_formula(0, scale, weight_poly);
    const Rational length_asymptote =
        Rational(length_coeff * rational_pow(Rational(2 * scale), static_cast<unsigned long>(length_exp)));
    Rational length_error = Rational(length_avg / length_asymptote - 1);
    if (length_error < 0) length_error = Rational(-length_error);

    const auto [size_coeff, size_exp] =
        asymptotic_coefficient(i, j, AsymptoticRegime::large_size);
    const Rational size_avg = average_weight_formula(scale, 0, weight_poly);
    const Rational size_asymptote =
        Rational(size_coeff * rational_pow(Rational(scale), static_cast<unsigned long>(size_exp)));
    Rational size_error = Rational(size_avg / size_asymptote - 1);
    if (size_error < 0) size_error = Rational(-size_error);

    if (length_error > tolerance || size_error > tolerance) {
      std::ostringstream os;
      os << "ratio out of tolerance for (i,j)=(" << i << "," << j << "): length regime error "
         << length_error.get_str() << ", size regime error " << size_error.get_str();
      return fail(name, os.str());
    }
  }
  return pass(name, "formula within 5% of both asymptotes at scale 500");
}

CheckResult check_hook_content_box_weights(int max_r, int max_n) {
  const std::string name = "hook-content-box-weights";
  std::vector<StepWeight> weights;
  for (int r = 0; r <= max_r; ++r) weights.push_back(hook_step_weight(r));
  for (int r = 0; r <= max_r; ++r) weights.push_back(content_step_weight(r));
  long cases = 0;
  for (int n = 0; n <= max_n; ++n) {
    const WeightSums sums = weight_sums(Partition{}, 2 * n, weights, 1);
    for (int r = 0; r <= max_r; ++r) {
      const Rational hook_avg =
          Rational(sums.sums[static_cast<std::size_t>(r)] / Rational(sums.count));
      const Rational content_avg = Rational(
          sums.sums[static_cast<std::size_t>(max_r + 1 + r)] / Rational(sums.count));
      if (hook_avg != hook_product_average(r, n)) {
        std::ostringstream os;
        os << "hook identity mismatch at n=" << n << ", r=" << r << ": brute "
           << hook_avg.get_str() << ", closed form " << hook_product_average(r, n).get_str();
        return fail(name, os.str());
      }
      if (content_avg != content_product_average(r, n)) {
        std::ostringstream os;
        os << "content identity mismatch at n=" << n << ", r=" << r << ": brute "
           << content_avg.get_str() << ", closed form "
           << content_product_average(r, n).get_str();
        return fail(name, os.str());
      }
      cases += 2;
    }
    // r = 0 degenerates to the size weight: cross-check the two routes and
    // the normalized value n/3
    const Rational size_avg = closed_form(Formula::hz, 0, n, 0);
    if (hook_product_average(0, n) != size_avg || content_product_average(0, n) != size_avg)
      return fail(name, "r=0 does not match the size-weight average at n=" + std::to_string(n));
    const Rational normalized = Rational(size_avg / (2 * n + 1));
    if (normalized != make_rational(n, 3))
      return fail(name, "normalized r=0 value is not n/3 at n=" + std::to_string(n));
  }
  return pass(name, std::to_string(cases) + " box-weight identities");
}

CheckResult check_tableau_count_identities(int max_size) {
  const std::string name = "tableau-count-identities";
  for (int size = 0; size <= max_size; ++size) {
    Int square_sum = 0;
    for (const Partition& shape : partitions_of_size(size)) {
      const Int f = syt_count(shape);
      square_sum += f * f;
      Int up_sum = 0, down_sum = 0;
      for (const Partition& up : up_neighbors(shape)) up_sum += syt_count(up);
      for (const Partition& down : down_neighbors(shape)) down_sum += syt_count(down);
      if (up_sum != (size + 1) * f)
        return fail(name, "up-neighbor count sum failed at shape " + describe(shape));
      if (size > 0 && down_sum != f)
        return fail(name, "down-neighbor count sum failed at shape " + describe(shape));
      // the two neighbor relations invert each other
      for (const Partition& up : up_neighbors(shape)) {
        const auto downs = down_neighbors(up);
        if (std::find(downs.begin(), downs.end(), shape) == downs.end())
          return fail(name, "neighbor relations not inverse at shape " + describe(shape));
      }
    }
    if (square_sum != factorial(static_cast<unsigned long>(size)))
      return fail(name, "squared-count sum is not " + std::to_string(size) + "!");
  }
  return pass(name, "count identities up to size " + std::to_string(max_size));
}

CheckResult check_binomial_size_weight_at_origin(int max_r, int max_n) {
  const std::string name = "binomial-size-weight-at-origin";
  long cases = 0;
  for (int r = 0; r <= max_r; ++r) {
    for (int n = 0; n <= max_n; ++n) {
      try {
        closed_form(Formula::xr_at_origin, 0, n, r);  // throws on disagreement
      } catch (const AssertionFailure& e) {
        return fail(name, e.what());
      }
      ++cases;
    }
  }
  return pass(name, std::to_string(cases) + " operator evaluations at the origin");
}

std::vector<CheckResult> run_all_checks(const VerifyOptions& opts) {
  std::vector<std::function<CheckResult()>> checks = {
      [&] { return check_counting_consistency(opts.max_size, 8, 1); },
      [&] { return check_neighbor_count_ratios(std::max(opts.max_size, 5), opts.max_n); },
      [&] { return check_closed_form_averages(opts.max_size, opts.max_n); },
      [&] { return check_monomial_average_identity(opts.max_size, opts.max_n, 3); },
      [&] { return check_empty_shape_binomial_size_weight(4, std::max(opts.max_n, 6)); },
      [&] { return check_position_binomial_weight(std::min(opts.max_size, 3), opts.max_n, 3); },
      [] { return check_operator_golden_values(); },
      [&] { return check_operator_bijectivity(opts.samples, opts.max_degree, opts.seed); },
      [] { return check_leading_coefficients(6); },
      [] { return check_asymptotic_ratios(); },
      [&] { return check_hook_content_box_weights(2, std::max(opts.max_n, 5)); },
      [] { return check_tableau_count_identities(8); },
      [] { return check_binomial_size_weight_at_origin(4, 6); },
  };
  std::vector<CheckResult> results(checks.size());
  const int workers = std::max(1, std::min<int>(opts.workers, static_cast<int>(checks.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) results[i] = checks[i]();
    return results;
  }
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t i = cursor.fetch_add(1); i < checks.size(); i = cursor.fetch_add(1))
      results[i] = checks[i]();
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& thread : pool) thread.join();
  return results;
}

}  // namespace oscitab
