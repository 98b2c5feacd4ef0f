#pragma once

#include <vector>

#include "ringtrace/module.hpp"

namespace ringtrace {

// Resource bounds. Exceeding either raises ResourceError rather than
// silently truncating.
struct Limits {
    size_t pairCap = 2'000'000;   // S-pairs processed per Buchberger run
    int64_t degreeCap = 200;      // shifted degree of any reduced term / pair
};

// Pair bookkeeping used when extracting syzygies. GebauerMoeller prunes
// chain-criterion-redundant pairs and emits Koszul syzygies for coprime
// pairs directly; AllPairs processes every S-pair (reference behaviour).
enum class SyzPolicy { GebauerMoeller, AllPairs };

// ---------------------------------------------------------------------------
// Ideals

struct GroebnerBasis {
    RingPtr ring;
    std::vector<Poly> gens;  // reduced: monic, inter-reduced, ascending leads

    bool is_zero_ideal() const { return gens.empty(); }
    bool is_unit_ideal() const { return gens.size() == 1 && gens[0].is_constant(); }
};

GroebnerBasis buchberger(const std::vector<Poly>& gens, const Limits& lim = {});

// Fully reduced normal form; no term of the result is divisible by any
// leading term of gb. With quot, f = sum quot[k]*gb.gens[k] + result.
Poly normal_form(const Poly& f, const GroebnerBasis& gb,
                 std::vector<Poly>* quot = nullptr);

inline bool in_ideal(const Poly& f, const GroebnerBasis& gb) {
    return normal_form(f, gb).is_zero();
}

// Generators of ideal(gens) intersected with the subring omitting the first
// blockVars variables. Result polynomials live in the input ring but do not
// involve the eliminated variables.
std::vector<Poly> eliminate(const std::vector<Poly>& gens, int blockVars,
                            const Limits& lim = {});

bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b);

// ---------------------------------------------------------------------------
// Modules

// Monic Groebner basis of the submodule generated by gens (not inter-reduced).
std::vector<Vec> module_groebner(const std::vector<Vec>& gens, const Limits& lim = {});

// Fully reduced normal form against a module Groebner basis.
Vec normal_form_vec(const Vec& v, const std::vector<Vec>& gb, const Limits& lim = {});

// Generating set of the first syzygy module of `columns` over the polynomial
// ring: vectors s in S^t with sum s_j * columns[j] = 0, exactly. The returned
// vectors live in a rank-t free module whose shifts are the column degrees.
std::vector<Vec> syzygies(const std::vector<Vec>& columns, const Limits& lim = {},
                          SyzPolicy policy = SyzPolicy::GebauerMoeller);

// Generators of the kernel of the map R^t -> R^t' given by the columns of M,
// over R = S/J: syzygies of [columns | g e_i] projected to the first t
// coordinates and reduced modulo J; zero vectors discarded, duplicates merged.
std::vector<Vec> kernel_mod_ideal(const std::vector<Vec>& columns,
                                  const std::vector<Poly>& idealGens,
                                  const GroebnerBasis& gbJ, const Limits& lim = {},
                                  SyzPolicy policy = SyzPolicy::GebauerMoeller);

// Minimal generating subset of a homogeneous generating set, extracted by
// ascending-degree membership tests (graded Nakayama).
std::vector<Vec> minimal_generators(const std::vector<Vec>& gens, const Limits& lim = {});

// Free module S^t whose shifts are the degrees of the generators (when all
// homogeneous) and whose mshifts are their multidegrees (when available).
FreeModulePtr make_generator_module(const std::vector<Vec>& gens);

}  // namespace ringtrace
