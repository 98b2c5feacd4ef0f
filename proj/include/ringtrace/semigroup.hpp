#pragma once

#include <memory>
#include <unordered_map>

#include "ringtrace/groebner.hpp"
#include "ringtrace/lattice.hpp"

namespace ringtrace {

// Homogeneous affine semigroup: minimal generators in N^d lying on a common
// affine hyperplane lambda . a = 1 off the origin.
struct AffineSemigroup {
    std::vector<IVec> gens;  // deduplicated minimal generating set
    int d = 0;
    std::vector<Rat> lambda;  // grading functional, lambda . g = 1 for all gens
    std::shared_ptr<const Lattice> lattice;  // ZS
    std::vector<std::string> warnings;

    Rat lambda_of(const IVec& v) const;
    // lambda value when it is a nonnegative integer, else nullopt
    std::optional<long long> degree_of(const IVec& v) const;
    int lattice_rank() const { return lattice->rank(); }
};

AffineSemigroup validate_semigroup(std::vector<IVec> gens);
AffineSemigroup numerical_curve(const std::vector<long long>& exponents);

// Memoized membership oracle; not shared between threads.
class MembershipOracle {
  public:
    explicit MembershipOracle(const AffineSemigroup& s);

    bool contains(const IVec& a);
    // certificate: generator indices (with multiplicity) summing to a
    bool contains(const IVec& a, std::vector<int>* cert);

  private:
    bool member(const IVec& a);

    const AffineSemigroup& s_;
    struct H {
        size_t operator()(const IVec& v) const;
    };
    std::unordered_map<IVec, int, H> memo_;  // -1 false, else witness gen index
    // fast path for generators of the form (1, e_i): minimal number of
    // positive coins needed per value
    bool curveShape_ = false;
    std::vector<long long> coins_;  // positive e_i - e_min
    long long eMin_ = 0;
    std::vector<uint16_t> minParts_;
    void grow_coin_table(long long upTo);
};

// Indices of generators spanning the extremal rays of the cone R>=0 S.
// Exact for d <= 3; for d > 3 only simplicial cones are handled.
std::vector<int> extremal_rays(const AffineSemigroup& s);

// Exact facet description of the cone (d <= 3).
struct ConeFacets {
    std::vector<IVec> normals;  // inward: x in cone iff n . x >= 0 for all n
    bool contains(const IVec& x) const;
};
ConeFacets cone_facets(const AffineSemigroup& s);

struct HoleReport {
    struct Hole {
        IVec point;
        std::vector<int> familyDirs;  // extremal-ray indices whose line through
                                      // the hole stays disjoint from S in the box
    };
    std::vector<Hole> holes;
    bool everyHoleInMaxFamily = true;  // d=2: every hole on a fully-hole line
    long long bound = 0;
};
// Enumerates (ZS intersect cone) \ S up to lambda-degree `bound`; groups the
// holes into lines parallel to extremal rays when d = 2.
HoleReport holes_box(const AffineSemigroup& s, long long bound);
long long default_hole_bound(const AffineSemigroup& s);

// For x in ZS outside the cone (d = 2): an extremal generator l such that the
// violated facet functional is constant along x + N l, so (x + N l) misses the
// cone entirely. Returns the generator index.
int outside_ray_witness(const AffineSemigroup& s, const IVec& x);

// Kernel of x_i -> t^{a_i}, by elimination of a t-block. The returned ring
// carries the multigrading whose columns are the semigroup generators.
std::vector<Poly> toric_ideal(const AffineSemigroup& s,
                              std::vector<std::string> varNames, const Limits& lim,
                              RingPtr* outRing);
std::vector<std::string> default_toric_names(int n);

}  // namespace ringtrace
