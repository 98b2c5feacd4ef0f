#pragma once

#include "ringtrace/resolution.hpp"
#include "ringtrace/semigroup.hpp"

namespace ringtrace {

// Multidegrees of the canonical module generators of a CM semigroup ring,
// stored up to one common translation, normalized so the least lambda-degree
// is zero. All predicates built on this data are translation invariant.
struct CanonicalData {
    std::vector<IVec> V;        // canonical generator multidegrees (normalized)
    std::vector<int> vminIdx;   // indices of V with lambda-degree 0
    IVec shift;                 // translation applied to the raw degrees
};

// Reads V off the multigraded shifts of the last free module of the minimal
// resolution of the toric ideal.
CanonicalData canonical_V(const AffineSemigroup& s, const GradedResolution& res,
                          const RingInvariants& inv, const HilbertData& hd);

// u in S - V: u lies in ZS and u + v is in S for every v in V.
bool in_s_minus_v(const IVec& u, const CanonicalData& cd, const AffineSemigroup& s,
                  MembershipOracle& oracle);

struct NgCertificate {
    int genIdx;
    IVec v;  // element of V_min
    IVec u;  // element of S - V with gen = u + v (up to the common translation)
};

struct NgResult {
    bool nearlyGorenstein = false;
    std::vector<NgCertificate> certificates;  // one per generator when NG
    std::optional<int> firstFailing;          // generator index otherwise
};

// The combinatorial criterion: nearly Gorenstein iff every semigroup
// generator splits as u + v with v in V_min and u in S - V. With fullV, the
// search ranges over all of V instead (provably equivalent; kept as a
// cross-checkable secondary mode).
NgResult nearly_gorenstein_combinatorial(const AffineSemigroup& s,
                                         const CanonicalData& cd,
                                         bool fullV = false);

struct TraceSet {
    std::vector<int> members;  // generator indices admitting certificates
    std::vector<NgCertificate> certificates;
};

TraceSet semigroup_trace_set(const AffineSemigroup& s, const CanonicalData& cd);

struct AuditCheck {
    bool applicable = false;
    bool pass = true;
};

// Structural identities that must hold for CM homogeneous semigroups; a
// failure signals an internal inconsistency, never a property of the input.
struct StructureAudit {
    AuditCheck extremalEscape;   // |V_min| = 1, |V| >= 2  =>  some extremal
                                 // generator falls outside the trace set
    AuditCheck topHAtLeast2;     // NG and not Gorenstein  =>  h_s >= 2
    AuditCheck type2Level;       // NG and type 2          =>  level
    AuditCheck vminEqualsTopH;   // |V_min| = h_s
    bool all_pass() const;
};

StructureAudit structure_audit(const AffineSemigroup& s, const CanonicalData& cd,
                               const RingInvariants& inv, const HilbertData& hd,
                               const NgResult& ng, const TraceSet& ts);

}  // namespace ringtrace
