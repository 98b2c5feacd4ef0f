#include "ringtrace/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ringtrace/errors.hpp"

namespace ringtrace {

namespace {

std::string face_str(const std::vector<int>& f) {
    std::string s = "{";
    for (size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f[i]);
    }
    return s + "}";
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& f : facets) d = std::max(d, int(f.size()) - 1);
    return d;
}

bool SimplicialComplex::is_face(const std::vector<int>& f) const {
    for (const auto& fac : facets)
        if (subset(f, fac)) return true;
    return false;
}

bool SimplicialComplex::pure() const {
    for (const auto& f : facets)
        if (int(f.size()) - 1 != dim()) return false;
    return true;
}

SimplicialComplex make_complex(int n, std::vector<std::vector<int>> facets) {
    if (n < 1) throw InputError("complex needs at least one vertex");
    SimplicialComplex c;
    c.n = n;
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.empty()) throw InputError("empty facet");
        for (int v : f)
            if (v < 1 || v > n)
                throw InputError("facet vertex " + std::to_string(v) +
                                 " out of range 1.." + std::to_string(n));
    }
    // drop duplicated or nested facets
    for (size_t i = 0; i < facets.size(); ++i) {
        bool nested = false;
        for (size_t j = 0; j < facets.size() && !nested; ++j) {
            if (i == j) continue;
            if (subset(facets[i], facets[j]) &&
                (facets[i] != facets[j] || j < i))
                nested = true;
        }
        if (nested)
            c.warnings.push_back("facet " + face_str(facets[i]) +
                                 " is contained in another facet; dropped");
        else
            c.facets.push_back(facets[i]);
    }
    if (c.facets.empty()) throw InputError("complex has no facets");
    std::vector<bool> seen(n + 1, false);
    for (const auto& f : c.facets)
        for (int v : f) seen[v] = true;
    for (int v = 1; v <= n; ++v)
        if (!seen[v])
            throw InputError("vertex " + std::to_string(v) +
                             " does not appear in any facet");
    return c;
}

std::vector<Poly> sr_ideal(const SimplicialComplex& c, RingPtr* outRing) {
    const int n = c.n;
    if (n > 24) throw ResourceError("face enumeration capped at 24 vertices");
    std::vector<std::vector<int64_t>> fine(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i) fine[i][i] = 1;
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    RingPtr ring = make_ring(names, TermOrder{OrderKind::DegRevLex},
                             std::vector<int64_t>(n, 1), fine);
    if (outRing) *outRing = ring;

    std::vector<uint32_t> facetMasks;
    for (const auto& f : c.facets) {
        uint32_t m = 0;
        for (int v : f) m |= (1u << (v - 1));
        facetMasks.push_back(m);
    }
    auto isFaceMask = [&](uint32_t m) {
        for (uint32_t fm : facetMasks)
            if ((m & ~fm) == 0) return true;
        return false;
    };
    std::vector<Poly> gens;
    const int maxSize = c.dim() + 2;
    for (uint32_t m = 1; m < (1u << n); ++m) {
        int sz = __builtin_popcount(m);
        if (sz > maxSize || sz < 2) continue;  // single vertices are faces
        if (isFaceMask(m)) continue;
        bool minimal = true;
        for (int b = 0; b < n && minimal; ++b)
            if ((m >> b) & 1)
                if (!isFaceMask(m & ~(1u << b))) minimal = false;
        if (!minimal) continue;
        Expo e(n, 0);
        for (int b = 0; b < n; ++b)
            if ((m >> b) & 1) e[b] = 1;
        gens.push_back(Poly::monomial(ring, Rat(1), std::move(e)));
    }
    std::sort(gens.begin(), gens.end(), [&](const Poly& a, const Poly& b) {
        return ring->cmp(a.lead().m, b.lead().m) < 0;
    });
    return gens;
}

SimplicialComplex link(const SimplicialComplex& c, const std::vector<int>& face,
                       std::vector<int>* vertexMap) {
    std::vector<int> f = face;
    std::sort(f.begin(), f.end());
    if (!c.is_face(f)) throw InputError("link of a non-face " + face_str(face));
    std::vector<std::vector<int>> linkFacets;
    std::set<int> verts;
    for (const auto& fac : c.facets) {
        if (!subset(f, fac)) continue;
        std::vector<int> rest;
        std::set_difference(fac.begin(), fac.end(), f.begin(), f.end(),
                            std::back_inserter(rest));
        if (rest.empty()) continue;
        for (int v : rest) verts.insert(v);
        linkFacets.push_back(rest);
    }
    if (linkFacets.empty()) {
        // the link is {emptyset}: represent it as the degenerate 0-vertex case
        SimplicialComplex empty;
        empty.n = 0;
        if (vertexMap) vertexMap->clear();
        return empty;
    }
    std::vector<int> map(verts.begin(), verts.end());
    if (vertexMap) *vertexMap = map;
    auto reindex = [&](int v) {
        return int(std::lower_bound(map.begin(), map.end(), v) - map.begin()) + 1;
    };
    for (auto& lf : linkFacets)
        for (int& v : lf) v = reindex(v);
    return make_complex(int(map.size()), std::move(linkFacets));
}

const char* one_dim_class_name(OneDimClass k) {
    switch (k) {
        case OneDimClass::Path: return "path";
        case OneDimClass::Cycle: return "cycle";
        case OneDimClass::Other: return "other";
        case OneDimClass::NotOneDim: return "not-1-dim";
    }
    return "?";
}

namespace {

struct Graph {
    int n;
    std::vector<std::pair<int, int>> edges;       // 0-based
    std::vector<std::vector<int>> adj;

    explicit Graph(const SimplicialComplex& c) : n(c.n), adj(c.n) {
        for (const auto& f : c.facets)
            if (f.size() == 2) {
                int a = f[0] - 1, b = f[1] - 1;
                adj[a].push_back(b);
                adj[b].push_back(a);
                edges.push_back({a, b});
            }
    }

    bool connected_on_support() const {
        std::vector<int> stack;
        std::vector<bool> vis(n, false);
        int start = -1, total = 0;
        for (int v = 0; v < n; ++v)
            if (!adj[v].empty()) {
                ++total;
                if (start < 0) start = v;
            }
        if (start < 0) return false;
        stack.push_back(start);
        vis[start] = true;
        int seen = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++seen;
            for (int w : adj[v])
                if (!vis[w]) {
                    vis[w] = true;
                    stack.push_back(w);
                }
        }
        return seen == total;
    }
};

}  // namespace

OneDimReport classify_1dim(const SimplicialComplex& c) {
    OneDimReport rep;
    if (c.dim() != 1) return rep;
    Graph g(c);
    // vertices outside any edge (0-dimensional facets) break both patterns
    bool hasIsolated = false;
    for (const auto& f : c.facets)
        if (f.size() == 1) hasIsolated = true;
    rep.connected = !hasIsolated && g.connected_on_support();
    if (!rep.connected) {
        rep.cls = OneDimClass::Other;
        return rep;
    }
    int deg1 = 0, deg2 = 0, other = 0;
    for (int v = 0; v < g.n; ++v) {
        size_t d = g.adj[v].size();
        if (d == 0) continue;
        if (d == 1) ++deg1;
        else if (d == 2) ++deg2;
        else ++other;
    }
    if (other == 0 && deg1 == 2)
        rep.cls = OneDimClass::Path;
    else if (other == 0 && deg1 == 0)
        rep.cls = OneDimClass::Cycle;
    else
        rep.cls = OneDimClass::Other;
    rep.predictedNearlyGorenstein =
        rep.cls == OneDimClass::Path || rep.cls == OneDimClass::Cycle;
    // a cycle is Gorenstein; so is the 1-simplex (the whole polynomial ring)
    rep.predictedGorenstein = rep.cls == OneDimClass::Cycle ||
                              (rep.cls == OneDimClass::Path && g.edges.size() == 1);
    return rep;
}

bool complex_is_gorenstein(const SimplicialComplex& c, const Limits& lim) {
    if (c.n == 0) return true;  // the field
    std::vector<Poly> I = sr_ideal(c, nullptr);
    if (I.empty()) return true;  // full simplex: polynomial ring
    GradedResolution res = minimal_free_resolution(I, lim);
    RingInvariants inv = ring_invariants(res, c.dim() + 1);
    return inv.isCM && inv.type && *inv.type == 1;
}

LocalGorensteinReport locally_gorenstein(const SimplicialComplex& c,
                                         const Limits& lim) {
    LocalGorensteinReport rep;
    rep.pure = c.pure();
    for (int v = 1; v <= c.n; ++v) {
        SimplicialComplex lk = link(c, {v});
        bool g = complex_is_gorenstein(lk, lim);
        rep.perVertex.push_back({v, g});
        if (!g) rep.locallyGorenstein = false;
    }
    return rep;
}

CanonicalGensReport known_canonical_generators(KnownFamily family, int n,
                                               const Limits& lim) {
    if (n < 2) throw InputError("known canonical generators need n >= 2");
    CanonicalGensReport rep;
    SimplicialComplex c;
    int expectDim;  // Krull dimension of k[Delta]
    if (family == KnownFamily::Points) {
        std::vector<std::vector<int>> facets;
        for (int v = 1; v <= n; ++v) facets.push_back({v});
        c = make_complex(n, facets);
        expectDim = 1;
    } else {
        std::vector<std::vector<int>> facets;
        for (int v = 1; v <= n; ++v) facets.push_back({v, v + 1});
        c = make_complex(n + 1, facets);
        expectDim = 2;
    }
    std::vector<Poly> I = sr_ideal(c, &rep.ring);
    const RingPtr& R = rep.ring;
    if (family == KnownFamily::Points) {
        for (int k = 2; k <= n; ++k)
            rep.gens.push_back(Poly::variable(R, 0) - Poly::variable(R, k - 1));
    } else {
        // x_k x_{k+1}^2 + x_{k+1}^2 x_{k+2}, k = 1..n-1
        for (int k = 1; k <= n - 1; ++k) {
            Expo a(R->nvars(), 0), b(R->nvars(), 0);
            a[k - 1] = 1;
            a[k] = 2;
            b[k] = 2;
            b[k + 1] = 1;
            rep.gens.push_back(Poly::from_terms(R, {{Rat(1), a}, {Rat(1), b}}));
        }
    }
    std::vector<Poly> lifted = I;
    lifted.insert(lifted.end(), rep.gens.begin(), rep.gens.end());
    GradedResolution res = minimal_free_resolution(lifted, lim);
    GroebnerBasis gb = buchberger(lifted, lim);
    int dim = dim_from_initial_ideal(gb);
    RingInvariants inv = ring_invariants(res, dim);
    rep.verified = inv.isCM && inv.type && *inv.type == 1 && dim == expectDim - 1;
    if (!rep.verified)
        throw InternalError(
            "closed-form canonical generators failed the Gorenstein-quotient "
            "verification");
    return rep;
}

AlmostGorenstein1DimReport almost_gorenstein_1dim(const SimplicialComplex& c) {
    AlmostGorenstein1DimReport rep;
    OneDimReport cls = classify_1dim(c);
    if (c.dim() != 1 || !cls.connected) return rep;
    rep.applicable = true;
    Graph g(c);
    std::vector<int> verts;
    for (int v = 0; v < g.n; ++v)
        if (!g.adj[v].empty()) verts.push_back(v);
    if (g.edges.size() == verts.size() - 1) {
        rep.value = true;  // a tree
        return rep;
    }
    // biconnected blocks via the standard DFS edge stack
    std::vector<int> num(g.n, -1), low(g.n, 0);
    std::vector<std::pair<int, int>> stack;
    std::vector<std::vector<std::pair<int, int>>> blocks;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        num[v] = low[v] = timer++;
        for (int w : g.adj[v]) {
            if (w == parent) {
                parent = -2;  // skip one copy of the tree edge
                continue;
            }
            if (num[w] == -1) {
                stack.push_back({v, w});
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) {
                    std::vector<std::pair<int, int>> blk;
                    while (true) {
                        auto e = stack.back();
                        stack.pop_back();
                        blk.push_back(e);
                        if (e == std::make_pair(v, w)) break;
                    }
                    blocks.push_back(std::move(blk));
                }
            } else if (num[w] < num[v]) {
                stack.push_back({v, w});
                low[v] = std::min(low[v], num[w]);
            }
        }
    };
    dfs(verts[0], -1);
    bool ok = true;
    for (const auto& blk : blocks) {
        std::set<int> bv;
        for (auto [a, b] : blk) {
            bv.insert(a);
            bv.insert(b);
        }
        // a block that is a single edge is a bridge; a cycle block has as many
        // edges as vertices
        if (blk.size() == 1 || blk.size() != bv.size()) ok = false;
    }
    rep.value = ok;
    return rep;
}

}  // namespace ringtrace
