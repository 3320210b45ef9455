#include <oscitab/verification.hpp>

#include <doctest.h>

#include <vector>

using namespace oscitab;

TEST_CASE("verification suite passes at reduced desk scale") {
  VerifyOptions opts;
  opts.max_size = 3;
  opts.max_n = 2;
  opts.max_degree = 4;
  opts.samples = 40;

  const std::vector<CheckResult> sequential = run_all_checks(opts);
  REQUIRE(sequential.size() == 13);
  for (const CheckResult& check : sequential) {
    INFO(check.name, ": ", check.detail);
    CHECK(check.passed);
  }

  SUBCASE("parallel execution returns the same results in the same order") {
    opts.workers = 4;
    const std::vector<CheckResult> parallel = run_all_checks(opts);
    REQUIRE(parallel.size() == sequential.size());
    for (std::size_t i = 0; i < parallel.size(); ++i) {
      CHECK(parallel[i].name == sequential[i].name);
      CHECK(parallel[i].passed == sequential[i].passed);
      CHECK(parallel[i].detail == sequential[i].detail);
    }
  }
}
