#pragma once

#include "ringtrace/resolution.hpp"

namespace ringtrace {

// Trace ideal of the canonical module of a Cohen-Macaulay quotient R = S/J,
// generated by the entries of the kernel generators of the last resolution
// map tensored down to R, together with J.
struct TraceIdeal {
    std::vector<Poly> entries;     // kernel entries, reduced mod J, deduplicated
    std::vector<Vec> kernelGens;   // the kernel generators themselves
    GroebnerBasis gb;              // reduced GB of (entries) + J
};

TraceIdeal trace_canonical(const std::vector<Poly>& idealGens,
                           const GradedResolution& res, const GroebnerBasis& gbJ,
                           const RingInvariants& inv, const Limits& lim = {});

// tr(omega) contains the graded maximal ideal.
bool trace_contains_max_ideal(const TraceIdeal& trace);

bool trace_is_unit(const TraceIdeal& trace);

// Smallest k <= kMax with every degree-k monomial in the trace ideal, or
// nullopt. k = 0 means the trace is the unit ideal. A nullopt result is a
// cutoff statement, not a proof of failure beyond kMax.
std::optional<int> punctured_index(const TraceIdeal& trace, int kMax);

struct Type2Report {
    bool applicable = false;
    std::optional<bool> value;
};

// Type-2 shortcut: when r(R) = 2 and dim R > 0, R is nearly Gorenstein
// exactly when the entries of the last resolution map generate the maximal
// ideal modulo J.
Type2Report type2_shortcut(const std::vector<Poly>& idealGens,
                           const GradedResolution& res, const RingInvariants& inv,
                           const Limits& lim = {});

}  // namespace ringtrace
