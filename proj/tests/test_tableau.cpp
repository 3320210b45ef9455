#include <oscitab/errors.hpp>
#include <oscitab/tableau.hpp>

#include <doctest.h>

#include <set>
#include <string>
#include <vector>

using namespace oscitab;

namespace {

OscillatingTableau walk(const std::vector<std::vector<int>>& steps) {
  std::vector<Partition> parsed;
  for (const auto& parts : steps) parsed.push_back(make_partition(parts));
  return make_oscillating_tableau(std::move(parsed));
}

std::vector<std::string> enumerate_as_json(const Partition& shape, int length) {
  std::vector<std::string> out;
  enumerate_oscillating(shape, length, [&](const OscillatingTableau& t) {
    out.push_back(to_json_string(t));
    return true;
  });
  return out;
}

const BivariatePolynomial X = BivariatePolynomial::variable_x();

}  // namespace

TEST_CASE("tableau validation") {
  CHECK(is_valid_oscillating_tableau(walk({{}, {1}, {2}, {1}, {}})));
  CHECK(is_valid_oscillating_tableau(walk({{}})));

  auto invalid = [](const std::vector<std::vector<int>>& steps) {
    std::vector<Partition> parsed;
    for (const auto& parts : steps) parsed.push_back(make_partition(parts));
    return !is_valid_oscillating_tableau(OscillatingTableau{std::move(parsed)});
  };
  CHECK(invalid({{1}, {2}}));            // must start empty
  CHECK(invalid({{}, {2}}));             // two boxes in one step
  CHECK(invalid({{}, {1}, {1}}));        // no change is not a step
  CHECK(invalid({{}, {1}, {2, 1}}));     // jump
  CHECK(invalid({}));                    // no steps at all
  CHECK_THROWS_AS(make_oscillating_tableau({make_partition({1})}), ValidationError);
}

TEST_CASE("closed-form count") {
  CHECK(count_oscillating(Partition{}, 0) == 1);
  CHECK(count_oscillating(Partition{}, 4) == 3);
  CHECK(count_oscillating(Partition{}, 6) == 15);
  CHECK(count_oscillating(make_partition({1}), 3) == 3);
  CHECK(count_oscillating(make_partition({2, 1}), 2) == 0);   // too short
  CHECK(count_oscillating(make_partition({2, 1}), 4) == 0);   // wrong parity
  CHECK(count_oscillating(make_partition({1, 1}), 4) == 6);
  CHECK(count_oscillating(make_partition({4, 2, 2, 1}), 9) == 216);
}

TEST_CASE("dynamic-programming count") {
  CHECK(count_oscillating_dp(Partition{}, 2) == 1);
  CHECK(count_oscillating_dp(Partition{}, 6) == 15);
  CHECK(count_oscillating_dp(make_partition({1, 1}), 4) == 6);
  CHECK(count_oscillating_dp(make_partition({2, 1}), 2) == 0);
}

TEST_CASE("count equals dp equals enumeration, and the parity rule") {
  for (int size = 0; size <= 5; ++size) {
    for (const Partition& shape : partitions_of_size(size)) {
      for (int length = 0; length <= size + 8; ++length) {
        const Int closed = count_oscillating(shape, length);
        CHECK(closed == count_oscillating_dp(shape, length));
        CHECK(closed == weight_sums(shape, length, {}, 2).count);
        const bool empty = length < size || (length - size) % 2 != 0;
        CHECK((closed == 0) == empty);
      }
    }
  }
}

TEST_CASE("enumeration emits the documented stream") {
  CHECK(enumerate_as_json(Partition{}, 2) == std::vector<std::string>{"[[],[1],[]]"});
  CHECK(enumerate_as_json(Partition{}, 4) ==
        std::vector<std::string>{"[[],[1],[],[1],[]]", "[[],[1],[2],[1],[]]",
                                 "[[],[1],[1,1],[1],[]]"});
  CHECK(enumerate_as_json(make_partition({2, 1}), 3) ==
        std::vector<std::string>{"[[],[1],[2],[2,1]]", "[[],[1],[1,1],[2,1]]"});
  CHECK(enumerate_as_json(make_partition({2, 1}), 2).empty());

  SUBCASE("every emitted tableau is valid, distinct and well-addressed") {
    const Partition shape = make_partition({2});
    std::set<std::string> seen;
    enumerate_oscillating(shape, 8, [&](const OscillatingTableau& t) {
      CHECK(is_valid_oscillating_tableau(t));
      CHECK(t.length() == 8);
      CHECK(t.shape() == shape);
      CHECK(seen.insert(to_json_string(t)).second);
      return true;
    });
    CHECK(Int(seen.size()) == count_oscillating(shape, 8));
  }

  SUBCASE("visitor can stop the stream") {
    int visits = 0;
    enumerate_oscillating(Partition{}, 10, [&](const OscillatingTableau&) {
      return ++visits < 4;
    });
    CHECK(visits == 4);
  }
}

TEST_CASE("weights of a tableau") {
  const OscillatingTableau small = walk({{}, {1}, {}});
  const OscillatingTableau spike = walk({{}, {1}, {2}, {1}, {}});

  CHECK(weight(small, WeightSpec{X}) == 1);
  CHECK(weight(spike, WeightSpec{X}) == 4);
  CHECK(weight(small, WeightSpec{BivariatePolynomial::constant(1)}) == 3);
  CHECK(weight(spike, WeightSpec{X * BivariatePolynomial::variable_y()}) == 8);

  CHECK(hook_product_weight(small, 0) == 1);
  CHECK(hook_product_weight(small, 1) == 0);
  CHECK(hook_product_weight(spike, 1) == 3);
  CHECK(content_product_weight(small, 0) == 1);
  CHECK(content_product_weight(small, 1) == 0);
  CHECK(content_product_weight(spike, 1) == 1);

  SUBCASE("r = 0 collapses to the size weight") {
    enumerate_oscillating(make_partition({1, 1}), 6, [&](const OscillatingTableau& t) {
      const Rational size_weight = weight(t, WeightSpec{X});
      CHECK(Rational(hook_product_weight(t, 0)) == size_weight);
      CHECK(Rational(content_product_weight(t, 0)) == size_weight);
      return true;
    });
  }
}

TEST_CASE("brute-force averages") {
  CHECK(average_weight_bruteforce(Partition{}, 2, polynomial_step_weight(X)) == 1);
  CHECK(average_weight_bruteforce(Partition{}, 4, polynomial_step_weight(X)) ==
        make_rational(10, 3));
  CHECK_THROWS_AS(
      average_weight_bruteforce(make_partition({2, 1}), 2, polynomial_step_weight(X)),
      EmptySetError);
}

TEST_CASE("parallel weight sums match the sequential ones") {
  const Partition shape = make_partition({2, 1});
  const std::vector<StepWeight> weights = {polynomial_step_weight(X), hook_step_weight(1),
                                           content_step_weight(2)};
  for (int length : {3, 5, 9}) {
    const WeightSums sequential = weight_sums(shape, length, weights, 1);
    for (int workers : {2, 3, 8}) {
      const WeightSums parallel = weight_sums(shape, length, weights, workers);
      CHECK(sequential.count == parallel.count);
      CHECK(sequential.sums == parallel.sums);
    }
  }
}

TEST_CASE("tableau JSON") {
  const OscillatingTableau t = walk({{}, {1}, {2}, {1}, {}});
  CHECK(to_json_string(t) == "[[],[1],[2],[1],[]]");
  CHECK(tableau_from_json("[[],[1],[2],[1],[]]") == t);
  CHECK(tableau_from_json(to_json_string(walk({{}, {1}, {1, 1}, {2, 1}}))) ==
        walk({{}, {1}, {1, 1}, {2, 1}}));

  CHECK_THROWS_AS(tableau_from_json("[]"), ValidationError);
  CHECK_THROWS_AS(tableau_from_json("[[1]]"), ValidationError);
  CHECK_THROWS_AS(tableau_from_json("[[],[2]]"), ValidationError);
  CHECK_THROWS_AS(tableau_from_json("nope"), ValidationError);
}
