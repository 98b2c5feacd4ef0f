#pragma once

#include <map>
#include <optional>

#include "ringtrace/groebner.hpp"

namespace ringtrace {

// Graded Betti numbers beta_{i,j}; i = 0 carries the single rank-1 entry for
// the cyclic quotient itself.
struct BettiTable {
    std::map<std::pair<int, int64_t>, int64_t> ranks;

    int64_t at(int i, int64_t j) const;
    int64_t total(int i) const;
    // serialization order: sorted by (i, j)
    std::vector<std::array<int64_t, 3>> rows() const;
};

// Minimal graded free resolution 0 -> F_p -> ... -> F_1 -> F_0 -> S/J -> 0 of
// a cyclic quotient. maps[k] holds the columns of phi_{k+1} as elements of F_k.
struct GradedResolution {
    RingPtr ring;
    std::vector<FreeModulePtr> modules;  // F_0 .. F_p
    std::vector<std::vector<Vec>> maps;  // size p

    int length() const { return int(maps.size()); }
    BettiTable betti() const;
    const std::vector<Vec>& last_map() const;
    // image of v (an element of F_k expressed via the columns of maps[k-1])
    Vec apply_map(int k, const Vec& v) const;
};

// Iterated minimal syzygies: each level is a minimal generating set, so every
// matrix entry lies in the maximal ideal and d compose to zero exactly; both
// facts are verified before returning.
GradedResolution minimal_free_resolution(const std::vector<Poly>& idealGens,
                                         const Limits& lim = {});
GradedResolution minimal_free_resolution(const RingPtr& ring,
                                         const std::vector<Poly>& idealGens,
                                         const Limits& lim = {});

struct RingInvariants {
    int n = 0;
    int dim = 0;
    int pd = 0;
    int codim = 0;
    bool isCM = false;
    std::optional<int64_t> type;        // meaningful when CM
    std::optional<bool> isLevel;        // meaningful when CM
    std::optional<bool> isGorenstein;   // meaningful when CM
    // degrees of the canonical module generators, as a multiset normalized to
    // least element 0 (only relative degrees are ever used)
    std::vector<int64_t> canonicalDegrees;
};

RingInvariants ring_invariants(const GradedResolution& res, int dim);

struct HilbertData {
    std::vector<Int> numerator;  // K(t), index = degree
    std::vector<Int> hvector;    // h(t) = K(t)/(1-t)^(n-dim)
    int dim = 0;

    // Hilbert function H(k) recovered from h(t)/(1-t)^dim
    Int hilbert_function(int64_t k) const;
};

HilbertData hilbert_data(const GradedResolution& res, int dim);

// Krull dimension of S/J from the maximal independent sets of the initial
// ideal's leading monomials.
int dim_from_initial_ideal(const GroebnerBasis& gb);

struct HilbertBurchReport {
    bool applicable = false;
    bool pass = false;
    std::string detail;
};

// For codim-2 ideals with three minimal generators: checks the 1-3-2 shape,
// that the last map has monomial entries, and that its signed 2x2 minors
// regenerate the ideal.
HilbertBurchReport hilbert_burch_audit(const std::vector<Poly>& idealGens,
                                       const GradedResolution& res, int dim,
                                       const Limits& lim = {});

}  // namespace ringtrace
