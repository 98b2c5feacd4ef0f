#pragma once

#include "ringtrace/resolution.hpp"

namespace ringtrace {

// Simplicial complex on vertices 1..n, described by its facets. Validation
// normalizes the facet list (dedup, drop nested) and requires every vertex to
// appear in some facet.
struct SimplicialComplex {
    int n = 0;
    std::vector<std::vector<int>> facets;  // 1-based, each sorted ascending
    std::vector<std::string> warnings;

    int dim() const;
    bool is_face(const std::vector<int>& f) const;
    bool pure() const;
};

SimplicialComplex make_complex(int n, std::vector<std::vector<int>> facets);

// Stanley-Reisner ideal: minimal non-faces as squarefree monomials in
// Q[x1..xn] (standard grading, fine Z^n multigrading).
std::vector<Poly> sr_ideal(const SimplicialComplex& c, RingPtr* outRing);

// link_Delta(F); vertexMap[i] gives the original label of the i-th vertex of
// the link (1-based labels).
SimplicialComplex link(const SimplicialComplex& c, const std::vector<int>& face,
                       std::vector<int>* vertexMap = nullptr);

enum class OneDimClass { Path, Cycle, Other, NotOneDim };
const char* one_dim_class_name(OneDimClass k);

struct OneDimReport {
    OneDimClass cls = OneDimClass::NotOneDim;
    bool connected = false;
    bool predictedNearlyGorenstein = false;
    bool predictedGorenstein = false;
};

// Graph-theoretic classification of a connected 1-dimensional complex, with
// the combinatorial nearly-Gorenstein / Gorenstein predictions.
OneDimReport classify_1dim(const SimplicialComplex& c);

struct LocalGorensteinReport {
    bool pure = true;
    bool locallyGorenstein = true;
    std::vector<std::pair<int, bool>> perVertex;  // (vertex label, verdict)
};

// Gorenstein test of the quotient defined by a complex: CM over Q with type 1.
bool complex_is_gorenstein(const SimplicialComplex& c, const Limits& lim = {});

LocalGorensteinReport locally_gorenstein(const SimplicialComplex& c,
                                         const Limits& lim = {});

enum class KnownFamily { Points, Path };

struct CanonicalGensReport {
    RingPtr ring;
    std::vector<Poly> gens;
    bool verified = false;  // quotient by the lifted ideal is Gorenstein of
                            // dimension dim k[Delta] - 1
};

// Closed-form canonical ideal generators for n isolated points (n >= 2) and
// for paths with n >= 2 edges, verified through the resolution engine.
CanonicalGensReport known_canonical_generators(KnownFamily family, int n,
                                               const Limits& lim = {});

struct AlmostGorenstein1DimReport {
    bool applicable = false;
    bool value = false;
    // the "ridge sum of cycles" reading is a documented choice, so every
    // verdict carries this flag
    bool definitionDependent = true;
};

// Tree, or bridgeless with every block a cycle.
AlmostGorenstein1DimReport almost_gorenstein_1dim(const SimplicialComplex& c);

}  // namespace ringtrace
