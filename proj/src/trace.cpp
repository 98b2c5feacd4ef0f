#include "ringtrace/trace.hpp"

#include <algorithm>
#include <functional>

#include "ringtrace/errors.hpp"

namespace ringtrace {

namespace {

// all monomials of total degree k, deterministic colex-style enumeration
void degree_k_monomials(int n, int k, Expo& cur, int from,
                        const std::function<void(const Expo&)>& emit) {
    if (from == n - 1) {
        cur[from] = k;
        emit(cur);
        cur[from] = 0;
        return;
    }
    for (int e = k; e >= 0; --e) {
        cur[from] = e;
        degree_k_monomials(n, k - e, cur, from + 1, emit);
        cur[from] = 0;
    }
}

}  // namespace

TraceIdeal trace_canonical(const std::vector<Poly>& idealGens,
                           const GradedResolution& res, const GroebnerBasis& gbJ,
                           const RingInvariants& inv, const Limits& lim) {
    if (!inv.isCM)
        throw InputError("the trace of the canonical module is computed only for "
                         "Cohen-Macaulay quotients");
    const RingPtr& ring = res.ring;
    TraceIdeal tr;
    if (res.length() == 0) {
        // J = 0: the quotient is the polynomial ring, trace is the unit ideal
        tr.gb = buchberger({Poly::constant(ring, Rat(1))}, lim);
        return tr;
    }
    for (const Poly& g : idealGens)
        for (const Term& t : g.terms())
            if (expo_total(t.m) < 2)
                throw InputError(
                    "the trace criterion needs an ideal inside the square of the "
                    "maximal ideal");

    tr.kernelGens = kernel_mod_ideal(res.last_map(), idealGens, gbJ, lim);
    for (const Vec& v : tr.kernelGens) {
        for (const Poly& p : v.components()) {
            if (p.is_zero()) continue;
            if (std::find(tr.entries.begin(), tr.entries.end(), p) == tr.entries.end())
                tr.entries.push_back(p);
        }
    }
    std::sort(tr.entries.begin(), tr.entries.end(), [&](const Poly& a, const Poly& b) {
        int c = ring->cmp(a.lead().m, b.lead().m);
        if (c != 0) return c < 0;
        return a.str() < b.str();
    });
    std::vector<Poly> gens = tr.entries;
    gens.insert(gens.end(), idealGens.begin(), idealGens.end());
    tr.gb = buchberger(gens, lim);
    return tr;
}

bool trace_contains_max_ideal(const TraceIdeal& trace) {
    const RingPtr& ring = trace.gb.ring;
    for (int i = 0; i < ring->nvars(); ++i)
        if (!in_ideal(Poly::variable(ring, i), trace.gb)) return false;
    return true;
}

bool trace_is_unit(const TraceIdeal& trace) { return trace.gb.is_unit_ideal(); }

std::optional<int> punctured_index(const TraceIdeal& trace, int kMax) {
    const RingPtr& ring = trace.gb.ring;
    const int n = ring->nvars();
    for (int k = 0; k <= kMax; ++k) {
        bool all = true;
        Expo cur(n, 0);
        degree_k_monomials(n, k, cur, 0, [&](const Expo& m) {
            if (all && !in_ideal(Poly::monomial(ring, Rat(1), m), trace.gb))
                all = false;
        });
        if (all) return k;
    }
    return std::nullopt;
}

Type2Report type2_shortcut(const std::vector<Poly>& idealGens,
                           const GradedResolution& res, const RingInvariants& inv,
                           const Limits& lim) {
    Type2Report rep;
    if (!inv.isCM || !inv.type || *inv.type != 2 || inv.dim <= 0 ||
        res.length() == 0) {
        rep.applicable = false;
        return rep;
    }
    rep.applicable = true;
    std::vector<Poly> gens;
    for (const Vec& col : res.last_map())
        for (const Poly& p : col.components())
            if (!p.is_zero()) gens.push_back(p);
    gens.insert(gens.end(), idealGens.begin(), idealGens.end());
    GroebnerBasis gb = buchberger(gens, lim);
    bool all = true;
    for (int i = 0; i < res.ring->nvars() && all; ++i)
        if (!in_ideal(Poly::variable(res.ring, i), gb)) all = false;
    rep.value = all;
    return rep;
}

}  // namespace ringtrace
