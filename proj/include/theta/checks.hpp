#pragma once

#include <string>
#include <vector>

#include "theta/corpus.hpp"
#include "theta/standard_module.hpp"

namespace theta {

// Property-suite runner over the enumeration corpus. Counterexamples are
// reported as parseable module sources, annotated after a '#' with the
// parameters (k, tower, level) that produced them.
struct CheckReport {
  std::string suite;
  long long instances = 0;
  std::vector<std::string> counterexamples;
  bool ok() const { return counterexamples.empty(); }
};

// suite is one of: reversibility, equivalence, occurrence-oracle,
// conservation, roundtrip, ring.
CheckReport run_check(const std::string& suite, const CorpusBounds& bounds,
                      int jobs = 0);

std::vector<std::string> check_suite_names();

// Exhaustive first-occurrence oracle: scans every subsequence of the block
// for conditions (i)-(iv). Independent of the dynamic program it validates.
int occurrence_oracle_f(const std::vector<Segment>& sorted_block, int l,
                        bool mult_even);

// Exhaustive ladder oracle used by the unit tests.
std::vector<Segment> ladder_oracle(const std::vector<Segment>& sorted_block,
                                   HalfInt k);

}  // namespace theta
