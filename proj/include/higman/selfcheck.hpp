#ifndef HIGMAN_SELFCHECK_HPP_
#define HIGMAN_SELFCHECK_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "higman/upset.hpp"

namespace higman {

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::string counterexample;  // first failing instance, human-readable
};

struct SelfcheckReport {
  uint64_t seed = 0;
  int cases = 0;
  std::vector<SuiteResult> suites;
  // Audit observations that are reported but do not fail the run.
  std::vector<std::string> findings;

  bool ok() const {
    for (const auto& s : suites) {
      if (s.failures > 0) return false;
    }
    return true;
  }
};

// Cross-module property suites, all deterministic per seed. `cases` scales
// the instance counts.
SelfcheckReport run_selfcheck(uint64_t seed, int cases);

// Individual suites, exposed so the acceptance runner can pin its own
// instance counts.
namespace suites {

SuiteResult order_laws(uint64_t seed, int cases);
SuiteResult oracle_equivalence(uint64_t seed, int cases);
SuiteResult min_homomorphism(uint64_t seed, int cases);
// Same suite with a replaceable concatenation, for harness sanity tests.
SuiteResult min_homomorphism_with(
    uint64_t seed, int cases,
    const std::function<UpSet(const UpSet&, const UpSet&)>& product);
SuiteResult antichain_cardinality(uint64_t seed, int cases);
SuiteResult cancellation(uint64_t seed, int cases);
SuiteResult distributivity(uint64_t seed, int cases);
SuiteResult residual_maximality(uint64_t seed, int cases);
SuiteResult equidivisibility(uint64_t seed, int cases);
SuiteResult summability(uint64_t seed, int cases);
SuiteResult factorization_unique(uint64_t seed, int products, int antichains);
SuiteResult macneille_cones(uint64_t seed, int cases);
SuiteResult closure_laws(uint64_t seed, int cases);
SuiteResult closed_factors(uint64_t seed, int cases);
SuiteResult metric_axioms(uint64_t seed, int cases);
SuiteResult automaton_language_law(uint64_t seed, int cases);
SuiteResult blocks_agreement(uint64_t seed, int products, int antichains);
SuiteResult gluing(uint64_t seed, int cases);
SuiteResult boundary_cases();
SuiteResult worked_envelope();
SuiteResult prefix_suffix_audit(std::vector<std::string>* findings);

}  // namespace suites

}  // namespace higman

#endif  // HIGMAN_SELFCHECK_HPP_
