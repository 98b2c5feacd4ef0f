#include "ringtrace/resolution.hpp"

#include <algorithm>
#include <array>

#include "ringtrace/errors.hpp"

namespace ringtrace {

int64_t BettiTable::at(int i, int64_t j) const {
    auto it = ranks.find({i, j});
    return it == ranks.end() ? 0 : it->second;
}

int64_t BettiTable::total(int i) const {
    int64_t t = 0;
    for (const auto& [key, r] : ranks)
        if (key.first == i) t += r;
    return t;
}

std::vector<std::array<int64_t, 3>> BettiTable::rows() const {
    std::vector<std::array<int64_t, 3>> out;
    for (const auto& [key, r] : ranks) out.push_back({key.first, key.second, r});
    return out;  // std::map iterates sorted by (i, j)
}

BettiTable GradedResolution::betti() const {
    BettiTable b;
    for (size_t i = 0; i < modules.size(); ++i)
        for (int64_t sh : modules[i]->shifts) b.ranks[{int(i), sh}] += 1;
    return b;
}

const std::vector<Vec>& GradedResolution::last_map() const {
    if (maps.empty()) throw InternalError("resolution of length 0 has no maps");
    return maps.back();
}

Vec GradedResolution::apply_map(int k, const Vec& v) const {
    const auto& cols = maps[k - 1];
    Vec out = Vec::zero(cols.front().module());
    auto comps = v.components();
    for (size_t c = 0; c < cols.size(); ++c)
        if (!comps[c].is_zero()) out = out + poly_times_vec(comps[c], cols[c]);
    return out;
}

GradedResolution minimal_free_resolution(const std::vector<Poly>& idealGens,
                                         const Limits& lim) {
    if (idealGens.empty())
        throw InputError("resolution needs at least one polynomial to fix the ring");
    return minimal_free_resolution(idealGens.front().ring(), idealGens, lim);
}

GradedResolution minimal_free_resolution(const RingPtr& ring,
                                         const std::vector<Poly>& idealGens,
                                         const Limits& lim) {
    std::vector<Poly> gens;
    for (const Poly& g : idealGens) {
        if (!same_ring(g.ring(), ring))
            throw InputError("ideal generators live in different ambient rings");
        if (!g.is_zero()) gens.push_back(g);
    }

    GradedResolution res;
    res.ring = ring;

    bool multi = ring->has_multigrading();
    std::vector<std::vector<int64_t>> mshift0;
    if (multi) mshift0.push_back(std::vector<int64_t>(ring->multigrading.size(), 0));
    FreeModulePtr F0 = make_free_module(ring, {0}, mshift0);
    res.modules.push_back(F0);
    if (gens.empty()) return res;  // zero ideal: length 0

    for (const Poly& g : gens) {
        if (!g.is_homogeneous())
            throw InputError("resolution requires homogeneous generators; '" +
                             g.str() + "' is not");
        if (g.is_constant()) throw InputError("the ideal is not proper");
    }

    std::vector<Vec> cur;
    cur.reserve(gens.size());
    for (const Poly& g : gens) cur.push_back(Vec::poly_times_unit(F0, g, 0));
    cur = minimal_generators(cur, lim);

    const int n = ring->nvars();
    for (int level = 1; level <= n + 1; ++level) {
        if (level > n)
            throw InternalError("resolution exceeded the global dimension bound");
        res.maps.push_back(cur);
        res.modules.push_back(make_generator_module(cur));
        std::vector<Vec> syz = syzygies(cur, lim);
        std::vector<Vec> next = minimal_generators(syz, lim);
        if (next.empty()) break;
        cur = std::move(next);
    }

    // minimality: no unit entries
    for (const auto& cols : res.maps)
        for (const Vec& v : cols)
            for (const MTerm& t : v.terms())
                if (expo_is_zero(t.m))
                    throw InternalError("resolution map has a unit entry");
    // exactness of the complex: consecutive maps compose to zero
    for (int k = 2; k <= res.length(); ++k)
        for (const Vec& col : res.maps[k - 1])
            if (!res.apply_map(k - 1, col).is_zero())
                throw InternalError("consecutive resolution maps do not compose to zero");
    return res;
}

RingInvariants ring_invariants(const GradedResolution& res, int dim) {
    RingInvariants inv;
    inv.n = res.ring->nvars();
    inv.dim = dim;
    inv.pd = res.length();
    inv.codim = inv.n - dim;
    inv.isCM = (inv.pd == inv.codim);
    if (inv.isCM) {
        const FreeModulePtr& last = res.modules.back();
        inv.type = last->rank();
        int64_t jmax = *std::max_element(last->shifts.begin(), last->shifts.end());
        int64_t jmin = *std::min_element(last->shifts.begin(), last->shifts.end());
        inv.isLevel = (jmax == jmin);
        inv.isGorenstein = (*inv.type == 1);
        for (int64_t j : last->shifts) inv.canonicalDegrees.push_back(jmax - j);
        std::sort(inv.canonicalDegrees.begin(), inv.canonicalDegrees.end());
    }
    return inv;
}

Int HilbertData::hilbert_function(int64_t k) const {
    if (k < 0) return Int(0);
    Int total(0);
    for (size_t i = 0; i < hvector.size(); ++i) {
        if (int64_t(i) > k) break;
        if (dim == 0) {
            if (int64_t(i) == k) total += hvector[i];
            continue;
        }
        // binomial(k - i + dim - 1, dim - 1)
        Int binom(1);
        for (int64_t t = 1; t <= dim - 1; ++t) {
            binom *= Int(k - int64_t(i) + dim - 1 - (t - 1));
            binom /= Int(t);
        }
        total += hvector[i] * binom;
    }
    return total;
}

HilbertData hilbert_data(const GradedResolution& res, int dim) {
    HilbertData hd;
    hd.dim = dim;
    const int n = res.ring->nvars();
    std::map<int64_t, Int> K;
    for (size_t i = 0; i < res.modules.size(); ++i) {
        const int sign = (i % 2 == 0) ? 1 : -1;
        for (int64_t sh : res.modules[i]->shifts) K[sh] += sign;
    }
    int64_t maxdeg = 0;
    for (const auto& [j, c] : K)
        if (c != 0) {
            if (j < 0) throw InternalError("negative shift in resolution");
            maxdeg = std::max(maxdeg, j);
        }
    hd.numerator.assign(maxdeg + 1, Int(0));
    for (const auto& [j, c] : K)
        if (c != 0) hd.numerator[j] = c;

    std::vector<Int> h = hd.numerator;
    for (int step = 0; step < n - dim; ++step) {
        // divide by (1 - t): quotient coefficients are prefix sums, exact iff
        // the total sum vanishes
        Int run(0);
        for (Int& c : h) {
            run += c;
            c = run;
        }
        if (h.empty() || h.back() != 0)
            throw InternalError(
                "Hilbert numerator is not divisible by (1-t)^codim; the Krull "
                "dimension or the resolution is wrong");
        h.pop_back();
        while (!h.empty() && h.back() == 0) h.pop_back();
    }
    if (h.empty()) throw InternalError("empty h-vector");
    Int h1(0);
    for (const Int& c : h) h1 += c;
    if (h1 <= 0) throw InternalError("h(1) must be positive");
    hd.hvector = std::move(h);
    return hd;
}

int dim_from_initial_ideal(const GroebnerBasis& gb) {
    if (!gb.ring) throw InputError("dimension query without a ring");
    const int n = gb.ring->nvars();
    if (gb.gens.empty()) return n;
    if (gb.is_unit_ideal()) throw InputError("the unit ideal has no quotient dimension");
    if (n > 24) throw ResourceError("independent-set dimension search capped at 24 variables");
    std::vector<uint32_t> supports;
    for (const Poly& g : gb.gens) {
        uint32_t m = 0;
        for (int i = 0; i < n; ++i)
            if (g.lead().m[i] > 0) m |= (1u << i);
        supports.push_back(m);
    }
    int best = 0;
    for (uint32_t U = 0; U < (1u << n); ++U) {
        int size = __builtin_popcount(U);
        if (size <= best) continue;
        bool independent = true;
        for (uint32_t s : supports)
            if ((s & ~U) == 0) { independent = false; break; }
        if (independent) best = size;
    }
    return best;
}

HilbertBurchReport hilbert_burch_audit(const std::vector<Poly>& idealGens,
                                       const GradedResolution& res, int dim,
                                       const Limits& lim) {
    HilbertBurchReport rep;
    const int n = res.ring->nvars();
    const int codim = n - dim;
    const int64_t mingens = res.modules.size() >= 2 ? res.modules[1]->rank() : 0;
    if (codim != 2 || mingens != 3) {
        rep.applicable = false;
        rep.detail = "not applicable: needs codimension 2 with 3 minimal generators";
        return rep;
    }
    rep.applicable = true;
    if (res.length() != 2 || res.modules[1]->rank() != 3 ||
        res.modules[2]->rank() != 2) {
        rep.detail = "resolution shape is not 1-3-2";
        return rep;
    }
    const auto& cols = res.maps[1];  // two columns in F_1 (rank 3)
    std::vector<std::vector<Poly>> M(3, std::vector<Poly>(2, Poly::zero(res.ring)));
    for (int c = 0; c < 2; ++c) {
        auto comps = cols[c].components();
        for (int r = 0; r < 3; ++r) {
            M[r][c] = comps[r];
            if (comps[r].size() > 1) {
                rep.detail = "second resolution map has a non-monomial entry";
                return rep;
            }
        }
    }
    std::vector<Poly> minors;
    for (int r = 0; r < 3; ++r) {
        int a = (r == 0) ? 1 : 0;
        int b = (r == 2) ? 1 : 2;
        Poly det = M[a][0] * M[b][1] - M[a][1] * M[b][0];
        if (r % 2 == 1) det = -det;
        minors.push_back(det);
    }
    GroebnerBasis gbI = buchberger(idealGens, lim);
    GroebnerBasis gbM = buchberger(minors, lim);
    if (!ideal_equal(gbI, gbM)) {
        rep.detail = "signed 2x2 minors do not regenerate the ideal";
        return rep;
    }
    rep.pass = true;
    rep.detail = "shape 1-3-2, monomial entries, minors regenerate the ideal";
    return rep;
}

}  // namespace ringtrace
