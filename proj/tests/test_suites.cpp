#include <doctest.h>

#include <functional>

#include <string>

#include "support/suites.hpp"

namespace {

void require_clean(const bft::SuiteResult& r, int min_cases) {
  INFO(r.name << ": " << r.failures << " of " << r.cases << " failed; " << r.first_failure);
  CHECK(r.cases >= min_cases);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("randomized identities hold on every case") {
    for (const auto& r : bft::property_suites()) {
      CAPTURE(r.name);
      require_clean(r, 200);
    }
  }

  TEST_CASE("secondary Wu relation on s-characteristic vectors") { require_clean(bft::secondary_wu_suite(), 200); }
}

TEST_SUITE("oracles") {
  TEST_CASE("brute-force and closed-form oracles agree") {
    for (const auto& r : bft::oracle_suites()) {
      CAPTURE(r.name);
      require_clean(r, 1);
    }
  }
}
