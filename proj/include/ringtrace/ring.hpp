#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringtrace/monomial.hpp"

namespace ringtrace {

enum class OrderKind {
    DegRevLex,  // weighted degree, ties by reverse lexicographic
    Lex,
    Block,  // eliminates the first elimBlock variables (degrevlex within blocks)
};

struct TermOrder {
    OrderKind kind = OrderKind::DegRevLex;
    int elimBlock = 0;  // Block only: number of leading variables to eliminate
};

// Ambient polynomial ring descriptor: variable names, active term order,
// Z-grading weights, and an optional Z^d multigrading whose column j is the
// multidegree of variable j.
struct Ring {
    std::vector<std::string> vars;
    TermOrder order;
    std::vector<int64_t> weights;                // one per variable, all >= 1
    std::vector<std::vector<int64_t>> multigrading;  // d rows of length n, or empty

    int nvars() const { return int(vars.size()); }
    int64_t wdeg(const Expo& e) const { return expo_wdeg(e, weights); }
    std::vector<int64_t> multideg(const Expo& e) const;
    bool has_multigrading() const { return !multigrading.empty(); }

    // Total order on monomials: negative if a < b, 0 if equal, positive if a > b.
    int cmp(const Expo& a, const Expo& b) const;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars,
                  TermOrder order = {},
                  std::vector<int64_t> weights = {},
                  std::vector<std::vector<int64_t>> multigrading = {});

// Same ring up to the data that affects canonical forms.
bool same_ring(const Ring& a, const Ring& b);
inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || same_ring(*a, *b);
}

// Copy of `r` with a different active order (same variables and gradings).
RingPtr with_order(const RingPtr& r, TermOrder order);

int variable_index(const Ring& r, const std::string& name);  // -1 if absent

}  // namespace ringtrace
