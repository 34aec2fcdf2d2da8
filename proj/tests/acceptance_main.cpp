// Acceptance suite: one criterion per line, PASS/FAIL, nonzero exit when
// anything fails. Everything is seeded and deterministic; audit findings
// are printed but do not fail the run.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "higman/selfcheck.hpp"

namespace {

using higman::SuiteResult;

struct Criterion {
  int number;
  std::string label;
  std::vector<SuiteResult> parts;
};

int failures_of(const Criterion& c) {
  int f = 0;
  for (const auto& p : c.parts) f += p.failures;
  return f;
}

int checks_of(const Criterion& c) {
  int n = 0;
  for (const auto& p : c.parts) n += p.checks;
  return n;
}

}  // namespace

int main() {
  constexpr uint64_t kSeed = 20110508;
  std::vector<Criterion> criteria;
  std::vector<std::string> findings;

  using clock = std::chrono::steady_clock;
  auto timed = [&](Criterion c) {
    criteria.push_back(std::move(c));
  };

  const auto t0 = clock::now();
  namespace su = higman::suites;

  timed({1,
         "unique factorization into irreducibles",
         {su::factorization_unique(kSeed, 200, 200)}});
  timed({2,
         "block decomposition agrees with the algebra",
         {su::blocks_agreement(kSeed, 200, 200)}});
  timed({3, "worked envelope of the two-letter ladder", {su::worked_envelope()}});
  timed({4,
         "monoid laws, oracle cross-checked",
         {su::min_homomorphism(kSeed, 500), su::antichain_cardinality(kSeed, 500),
          su::cancellation(kSeed, 500), su::equidivisibility(kSeed, 500),
          su::order_laws(kSeed, 10), su::oracle_equivalence(kSeed, 120),
          su::residual_maximality(kSeed, 40), su::distributivity(kSeed, 200),
          su::summability(kSeed, 100)}});
  timed({5,
         "cone closure laws and closed factors",
         {su::macneille_cones(kSeed, 200), su::closure_laws(kSeed, 200),
          su::closed_factors(kSeed, 60)}});
  timed({6,
         "distance axioms and fixpoint semantics",
         {su::metric_axioms(kSeed, 120), su::automaton_language_law(kSeed, 120)}});
  timed({7, "gluing matches the envelope of the product", {su::gluing(kSeed, 100)}});
  timed({8, "boundary segments", {su::boundary_cases()}});
  timed({9,
         "prefix/suffix irreducibility audit",
         {su::prefix_suffix_audit(&findings)}});

  const double total_s =
      std::chrono::duration<double>(clock::now() - t0).count();

  int failed = 0;
  for (const auto& c : criteria) {
    const int f = failures_of(c);
    if (f > 0) ++failed;
    std::printf("%s  criterion %d: %s (%d checks%s)\n",
                f == 0 ? "PASS" : "FAIL", c.number, c.label.c_str(),
                checks_of(c), f == 0 ? "" : ", see below");
    if (f > 0) {
      for (const auto& p : c.parts) {
        if (p.failures > 0) {
          std::printf("      %s: %d/%d failed; first: %s\n", p.name.c_str(),
                      p.failures, p.checks, p.counterexample.c_str());
        }
      }
    }
  }
  for (const auto& note : findings) {
    std::printf("FINDING  %s\n", note.c_str());
  }
  std::printf("%d/9 criteria passed in %.1fs\n",
              static_cast<int>(criteria.size()) - failed, total_s);
  return failed == 0 ? 0 : 1;
}
