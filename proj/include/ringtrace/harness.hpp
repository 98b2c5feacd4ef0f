#pragma once

#include "ringtrace/analysis.hpp"

namespace ringtrace {

// Randomized numerical-curve property run: on every Cohen-Macaulay instance
// the structural audits must hold (nearly Gorenstein non-Gorenstein rings
// have top h-entry >= 2; nearly Gorenstein type-2 rings are level; the two
// nearly-Gorenstein engines agree), and nearly Gorenstein instances with
// pd = type = 2 must have h-vector (1, 2, ..., 2).
struct HarnessResult {
    int instances = 0;
    int cmInstances = 0;
    int violations = 0;
    std::vector<std::string> notes;
};

HarnessResult run_curve_harness(int instances, uint64_t seed, int maxGens,
                                int maxExp, const AnalysisOptions& opt);

}  // namespace ringtrace
