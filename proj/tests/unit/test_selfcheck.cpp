#include <doctest.h>

#include "higman/selfcheck.hpp"
#include "higman/upset.hpp"

using namespace higman;

TEST_CASE("spot suites pass on small runs") {
  CHECK(suites::boundary_cases().failures == 0);
  CHECK(suites::worked_envelope().failures == 0);
  CHECK(suites::min_homomorphism(7, 5).failures == 0);
  CHECK(suites::gluing(7, 2).failures == 0);
}

TEST_CASE("an injected fault is caught with a counterexample") {
  // Swapping the product's arguments breaks the generator-antichain
  // homomorphism; the suite must notice and name an instance.
  auto broken = [](const UpSet& f, const UpSet& g) { return concat(g, f); };
  SuiteResult r = suites::min_homomorphism_with(7, 30, broken);
  CHECK(r.failures > 0);
  CHECK_FALSE(r.counterexample.empty());
}

TEST_CASE("reports are deterministic per seed") {
  SelfcheckReport r1 = run_selfcheck(11, 4);
  SelfcheckReport r2 = run_selfcheck(11, 4);
  REQUIRE(r1.suites.size() == r2.suites.size());
  for (size_t i = 0; i < r1.suites.size(); ++i) {
    CHECK(r1.suites[i].name == r2.suites[i].name);
    CHECK(r1.suites[i].checks == r2.suites[i].checks);
    CHECK(r1.suites[i].failures == r2.suites[i].failures);
  }
  CHECK(r1.findings == r2.findings);
  CHECK(r1.ok());
}
