#include "ringtrace/ng_semigroup.hpp"

#include <algorithm>

#include "ringtrace/errors.hpp"

namespace ringtrace {

namespace {

IVec vadd(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IVec vsub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

}  // namespace

CanonicalData canonical_V(const AffineSemigroup& s, const GradedResolution& res,
                          const RingInvariants& inv, const HilbertData& hd) {
    if (!inv.isCM)
        throw InputError("canonical generator degrees are defined for CM inputs only");
    if (!res.ring->has_multigrading() || !res.modules.back()->has_mshifts())
        throw InternalError("canonical_V needs a multigraded resolution");
    CanonicalData cd;
    const auto& mshifts = res.modules.back()->mshifts;
    const auto& zshifts = res.modules.back()->shifts;

    // lambda-degree of each multidegree must match the Z-shift
    long long maxDeg = 0;
    for (size_t j = 0; j < mshifts.size(); ++j) {
        IVec b(mshifts[j].begin(), mshifts[j].end());
        auto deg = s.degree_of(b);
        if (!deg || *deg != zshifts[j])
            throw InternalError("multidegree shift disagrees with the Z-degree shift");
        maxDeg = std::max(maxDeg, *deg);
    }
    // translate by maxDeg * a_1 so the least lambda-degree in V is 0
    cd.shift = IVec(s.d, 0);
    for (int i = 0; i < s.d; ++i) cd.shift[i] = maxDeg * s.gens[0][i];
    for (size_t j = 0; j < mshifts.size(); ++j) {
        IVec b(mshifts[j].begin(), mshifts[j].end());
        cd.V.push_back(vsub(cd.shift, b));
    }
    std::sort(cd.V.begin(), cd.V.end());
    for (size_t j = 0; j < cd.V.size(); ++j) {
        auto deg = s.degree_of(cd.V[j]);
        if (!deg) throw InternalError("canonical degree is not a nonnegative integer");
        if (!s.lattice->contains(cd.V[j]))
            throw InternalError("canonical multidegree outside the group ZS");
        if (*deg == 0) cd.vminIdx.push_back(int(j));
    }
    if (cd.vminIdx.empty()) throw InternalError("V_min is empty");
    if (inv.type && int64_t(cd.V.size()) != *inv.type)
        throw InternalError("|V| does not equal the Cohen-Macaulay type");
    Int hs = hd.hvector.back();
    if (Int(long(cd.vminIdx.size())) != hs)
        throw InternalError("|V_min| does not equal the top h-vector entry");
    return cd;
}

bool in_s_minus_v(const IVec& u, const CanonicalData& cd, const AffineSemigroup& s,
                  MembershipOracle& oracle) {
    if (!s.lattice->contains(u))
        throw InputError("S - V membership asked for a point outside ZS");
    for (const IVec& v : cd.V)
        if (!oracle.contains(vadd(u, v))) return false;
    return true;
}

namespace {

NgResult ng_search(const AffineSemigroup& s, const CanonicalData& cd, bool fullV) {
    MembershipOracle oracle(s);
    NgResult res;
    res.nearlyGorenstein = true;
    std::vector<int> candidates;
    if (fullV) {
        for (size_t i = 0; i < cd.V.size(); ++i) candidates.push_back(int(i));
    } else {
        candidates = cd.vminIdx;
    }
    for (int gi = 0; gi < int(s.gens.size()); ++gi) {
        bool found = false;
        for (int vi : candidates) {
            IVec u = vsub(s.gens[gi], cd.V[vi]);
            // u is in ZS automatically; the degree screen keeps failures cheap
            bool ok = true;
            for (const IVec& v : cd.V) {
                if (!oracle.contains(vadd(u, v))) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                res.certificates.push_back({gi, cd.V[vi], u});
                found = true;
                break;
            }
        }
        if (!found) {
            res.nearlyGorenstein = false;
            if (!res.firstFailing) res.firstFailing = gi;
        }
    }
    if (!res.nearlyGorenstein) res.certificates.clear();
    return res;
}

}  // namespace

NgResult nearly_gorenstein_combinatorial(const AffineSemigroup& s,
                                         const CanonicalData& cd, bool fullV) {
    return ng_search(s, cd, fullV);
}

TraceSet semigroup_trace_set(const AffineSemigroup& s, const CanonicalData& cd) {
    MembershipOracle oracle(s);
    TraceSet ts;
    for (int gi = 0; gi < int(s.gens.size()); ++gi) {
        for (int vi : cd.vminIdx) {
            IVec u = vsub(s.gens[gi], cd.V[vi]);
            bool ok = true;
            for (const IVec& v : cd.V) {
                if (!oracle.contains(vadd(u, v))) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                ts.members.push_back(gi);
                ts.certificates.push_back({gi, cd.V[vi], u});
                break;
            }
        }
    }
    return ts;
}

bool StructureAudit::all_pass() const {
    for (const AuditCheck* c :
         {&extremalEscape, &topHAtLeast2, &type2Level, &vminEqualsTopH})
        if (c->applicable && !c->pass) return false;
    return true;
}

StructureAudit structure_audit(const AffineSemigroup& s, const CanonicalData& cd,
                               const RingInvariants& inv, const HilbertData& hd,
                               const NgResult& ng, const TraceSet& ts) {
    StructureAudit audit;
    const Int hs = hd.hvector.back();

    if (cd.vminIdx.size() == 1 && cd.V.size() >= 2) {
        audit.extremalEscape.applicable = true;
        auto ext = extremal_rays(s);
        bool someOutside = false;
        for (int e : ext)
            if (std::find(ts.members.begin(), ts.members.end(), e) == ts.members.end())
                someOutside = true;
        audit.extremalEscape.pass = someOutside;
    }
    if (ng.nearlyGorenstein && inv.isGorenstein && !*inv.isGorenstein) {
        audit.topHAtLeast2.applicable = true;
        audit.topHAtLeast2.pass = (hs >= 2);
    }
    if (ng.nearlyGorenstein && inv.type && *inv.type == 2) {
        audit.type2Level.applicable = true;
        audit.type2Level.pass = inv.isLevel && *inv.isLevel;
    }
    audit.vminEqualsTopH.applicable = true;
    audit.vminEqualsTopH.pass = (Int(long(cd.vminIdx.size())) == hs);

    // trace set = all generators exactly when nearly Gorenstein
    if ((ts.members.size() == s.gens.size()) != ng.nearlyGorenstein)
        throw InternalError("trace set and the nearly-Gorenstein verdict disagree");
    return audit;
}

}  // namespace ringtrace
