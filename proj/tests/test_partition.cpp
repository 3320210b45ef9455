#include <oscitab/errors.hpp>
#include <oscitab/partition.hpp>

#include "support/syt_oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace oscitab;

namespace {

std::multiset<int> hook_multiset(const Partition& shape) {
  std::multiset<int> hooks;
  for (const Cell& c : cells(shape)) hooks.insert(c.hook);
  return hooks;
}

std::set<Partition> as_set(const std::vector<Partition>& shapes) {
  return {shapes.begin(), shapes.end()};
}

}  // namespace

TEST_CASE("make_partition canonicalizes and validates") {
  CHECK(make_partition({}).empty());
  CHECK(make_partition({}).size() == 0);

  const Partition p = make_partition({4, 2, 2, 1});
  CHECK(p.parts() == std::vector<int>{4, 2, 2, 1});
  CHECK(p.size() == 9);
  CHECK(p.rows() == 4);

  CHECK(make_partition({3, 0, 0}) == make_partition({3}));
  CHECK(make_partition({0, 0}) == Partition{});
  CHECK(make_partition({3, 3, 2}).size() == 8);

  CHECK_THROWS_AS(make_partition({2, 3}), ValidationError);
  CHECK_THROWS_AS(make_partition({1, 0, 2}), ValidationError);
  CHECK_THROWS_AS(make_partition({-1}), ValidationError);
  CHECK_THROWS_AS(make_partition({3, -1}), ValidationError);
}

TEST_CASE("cells carry hooks and contents in row-major order") {
  CHECK(cells(Partition{}).empty());

  SUBCASE("small staircase") {
    const auto cs = cells(make_partition({2, 1}));
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].row == 1);
    CHECK(cs[0].col == 1);
    CHECK(cs[0].hook == 3);
    CHECK(cs[0].content == 0);
    CHECK(cs[1].hook == 1);
    CHECK(cs[1].content == 1);
    CHECK(cs[2].hook == 1);
    CHECK(cs[2].content == -1);
  }

  SUBCASE("four-row shape") {
    const Partition shape = make_partition({4, 2, 2, 1});
    CHECK(hook_multiset(shape) == std::multiset<int>{7, 5, 2, 1, 4, 2, 3, 1, 1});
    CHECK(hook_product(shape) == 1680);
    std::multiset<int> contents;
    for (const Cell& c : cells(shape)) contents.insert(c.content);
    CHECK(contents == std::multiset<int>{0, 1, 2, 3, -1, 0, -2, -1, -3});
  }
}

TEST_CASE("syt_count matches frozen values and the filling oracle") {
  CHECK(syt_count(Partition{}) == 1);
  CHECK(syt_count(make_partition({1})) == 1);
  CHECK(syt_count(make_partition({2, 1})) == 2);
  CHECK(syt_count(make_partition({4, 2, 2, 1})) == 216);

  for (int size = 0; size <= 8; ++size)
    for (const Partition& shape : partitions_of_size(size))
      CHECK(syt_count(shape) == testing::count_syt_by_filling(shape));
}

TEST_CASE("neighbor sets") {
  const Partition shape = make_partition({5, 2, 2, 1});
  CHECK(as_set(up_neighbors(shape)) ==
        std::set<Partition>{make_partition({6, 2, 2, 1}), make_partition({5, 3, 2, 1}),
                            make_partition({5, 2, 2, 2}), make_partition({5, 2, 2, 1, 1})});
  CHECK(as_set(down_neighbors(shape)) ==
        std::set<Partition>{make_partition({4, 2, 2, 1}), make_partition({5, 2, 1, 1}),
                            make_partition({5, 2, 2})});

  CHECK(up_neighbors(Partition{}) == std::vector<Partition>{make_partition({1})});
  CHECK(down_neighbors(Partition{}).empty());
  CHECK(as_set(up_neighbors(make_partition({1}))) ==
        std::set<Partition>{make_partition({2}), make_partition({1, 1})});
  CHECK(down_neighbors(make_partition({2, 2})) ==
        std::vector<Partition>{make_partition({2, 1})});

  SUBCASE("returned in ascending lexicographic order") {
    const auto ups = up_neighbors(shape);
    CHECK(std::is_sorted(ups.begin(), ups.end()));
    const auto downs = down_neighbors(shape);
    CHECK(std::is_sorted(downs.begin(), downs.end()));
  }

  SUBCASE("up and down are inverse relations, all results canonical") {
    for (int size = 0; size <= 6; ++size) {
      for (const Partition& base : partitions_of_size(size)) {
        for (const Partition& up : up_neighbors(base)) {
          CHECK(make_partition(up.parts()) == up);  // passes validation
          const auto downs = down_neighbors(up);
          CHECK(std::find(downs.begin(), downs.end(), base) != downs.end());
        }
        for (const Partition& down : down_neighbors(base)) {
          const auto ups = up_neighbors(down);
          CHECK(std::find(ups.begin(), ups.end(), base) != ups.end());
        }
        CHECK(up_neighbors(base).size() == down_neighbors(base).size() + 1);
      }
    }
  }
}

TEST_CASE("partitions_of_size enumerates every partition once") {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) {
    const auto shapes = partitions_of_size(n);
    CHECK(static_cast<int>(shapes.size()) == expected[n]);
    CHECK(as_set(shapes).size() == shapes.size());
    for (const Partition& shape : shapes) {
      CHECK(shape.size() == n);
      CHECK(make_partition(shape.parts()) == shape);
    }
    if (n > 0) {
      CHECK(shapes.front() == make_partition({n}));
      CHECK(shapes.back() == make_partition(std::vector<int>(n, 1)));
    }
  }
}

TEST_CASE("partition JSON") {
  CHECK(to_json_string(Partition{}) == "[]");
  CHECK(to_json_string(make_partition({4, 2, 2, 1})) == "[4,2,2,1]");
  CHECK(partition_from_json("[4, 2, 2, 1]") == make_partition({4, 2, 2, 1}));
  CHECK(partition_from_json("[]") == Partition{});
  for (const Partition& shape : partitions_of_size(6))
    CHECK(partition_from_json(to_json_string(shape)) == shape);

  CHECK_THROWS_AS(partition_from_json("{}"), ValidationError);
  CHECK_THROWS_AS(partition_from_json("[1,\"a\"]"), ValidationError);
  CHECK_THROWS_AS(partition_from_json("[2,3]"), ValidationError);
  CHECK_THROWS_AS(partition_from_json("not json"), ValidationError);
}
