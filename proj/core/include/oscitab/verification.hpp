#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oscitab {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Bounds for the verification suite. The defaults are the desk-scale limits
/// used by the acceptance run; every comparison is exact regardless of size.
struct VerifyOptions {
  int max_size = 4;    // largest ending-shape size for enumeration checks
  int max_n = 3;       // walk length runs up to size + 2 * max_n
  int max_degree = 6;  // degree bound for random operator round trips
  int samples = 200;   // random polynomials in the bijectivity check
  std::uint64_t seed = 0x05C17AB5EEDULL;
  int workers = 1;
};

/// Every check, in a fixed order. workers > 1 runs them concurrently;
/// results are merged by position, so output never depends on scheduling.
std::vector<CheckResult> run_all_checks(const VerifyOptions& opts);

// Individual checks. Each compares an enumeration oracle against closed
// forms, or two independent computation routes against each other.
CheckResult check_counting_consistency(int max_size, int max_extra_length, int workers);
CheckResult check_neighbor_count_ratios(int max_size, int max_n);
CheckResult check_closed_form_averages(int max_size, int max_n);
CheckResult check_monomial_average_identity(int max_size, int max_n, int max_total_degree);
CheckResult check_empty_shape_binomial_size_weight(int max_r, int max_n);
CheckResult check_position_binomial_weight(int max_size, int max_n, int max_r);
CheckResult check_operator_golden_values();
CheckResult check_operator_bijectivity(int samples, int max_degree, std::uint64_t seed);
CheckResult check_leading_coefficients(int max_r);
CheckResult check_asymptotic_ratios();
CheckResult check_hook_content_box_weights(int max_r, int max_n);
CheckResult check_tableau_count_identities(int max_size);
CheckResult check_binomial_size_weight_at_origin(int max_r, int max_n);

}  // namespace oscitab
