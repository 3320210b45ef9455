#pragma once

#include <oscitab/partition.hpp>
#include <oscitab/polynomial.hpp>

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace oscitab {

/// A walk in Young's lattice that starts at the empty partition and changes
/// by exactly one box per step. steps[i] is the partition after i steps.
struct OscillatingTableau {
  std::vector<Partition> steps;

  int length() const { return static_cast<int>(steps.size()) - 1; }
  const Partition& shape() const { return steps.back(); }

  friend bool operator==(const OscillatingTableau&, const OscillatingTableau&) = default;
};

bool is_valid_oscillating_tableau(const OscillatingTableau& t);

/// Throws ValidationError unless the steps form an oscillating tableau.
OscillatingTableau make_oscillating_tableau(std::vector<Partition> steps);

/// Closed-form count of oscillating tableaux of the given shape and length:
/// with k the shape size and length = k + 2n, C(k+2n, k) * (2n-1)!! times the
/// number of standard Young tableaux of the shape. Zero when the length is
/// shorter than the shape size or has the wrong parity.
Int count_oscillating(const Partition& shape, int length);

/// The same count by memoized dynamic programming over Young's lattice;
/// shares nothing with the closed form. Safe to call from multiple threads.
Int count_oscillating_dp(const Partition& shape, int length);

/// Visits every oscillating tableau of the given shape and length exactly
/// once, in a fixed deterministic order, without materializing the set.
/// The visitor receives a buffer that is reused between calls; copy it to
/// keep it. Return false to stop early. Single consumer.
void enumerate_oscillating(const Partition& shape, int length,
                           const std::function<bool(const OscillatingTableau&)>& visit);

/// Weight of a single walk step: any pure function of the partition reached
/// and its position. The weight of a tableau is the sum over its steps.
using StepWeight = std::function<Rational(const Partition& part, int position)>;

/// A polynomial P applied as the weight sum of P(step size, position).
struct WeightSpec {
  BivariatePolynomial poly;
};

Rational weight(const OscillatingTableau& t, const WeightSpec& w);

/// Sum over all boxes of prod_{j=1..r} (hook^2 - j^2) for one diagram.
Int hook_box_sum(const Partition& shape, int r);
/// Sum over all boxes of prod_{j=0..r-1} (content^2 - j^2) for one diagram.
Int content_box_sum(const Partition& shape, int r);

/// Box-product weights summed over every step of the walk. The empty product
/// at r = 0 makes both collapse to the plain size weight.
Int hook_product_weight(const OscillatingTableau& t, int r);
Int content_product_weight(const OscillatingTableau& t, int r);

StepWeight polynomial_step_weight(const BivariatePolynomial& p);
StepWeight hook_step_weight(int r);
StepWeight content_step_weight(int r);

struct WeightSums {
  Int count;
  std::vector<Rational> sums;
};

/// Exact sums of step-additive weights over the whole tableau set, plus the
/// cardinality of the set. workers > 1 splits the enumeration into
/// independent subtrees (walks sharing a fixed tail) and merges the exact
/// partial sums in a fixed order, so results never depend on scheduling.
WeightSums weight_sums(const Partition& shape, int length,
                       std::span<const StepWeight> weights, int workers = 1);

/// Exact mean of a step-additive weight over all tableaux of the given shape
/// and length. Throws EmptySetError when the set is empty.
Rational average_weight_bruteforce(const Partition& shape, int length, const StepWeight& w,
                                   int workers = 1);

/// JSON array of partitions, e.g. [[],[1],[2],[1],[]].
std::string to_json_string(const OscillatingTableau& t);
OscillatingTableau tableau_from_json(const std::string& text);

}  // namespace oscitab
