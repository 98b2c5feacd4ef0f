#include "ringtrace/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

#include "ringtrace/errors.hpp"

namespace ringtrace {

namespace {

std::string vec_str(const IVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

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

long long cross2(const IVec& a, const IVec& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace

Rat AffineSemigroup::lambda_of(const IVec& v) const {
    Rat s(0);
    for (int i = 0; i < d; ++i) s += lambda[i] * Rat(long(v[i]));
    return s;
}

std::optional<long long> AffineSemigroup::degree_of(const IVec& v) const {
    Rat l = lambda_of(v);
    if (l < 0 || l.get_den() != 1) return std::nullopt;
    return l.get_num().get_si();
}

AffineSemigroup validate_semigroup(std::vector<IVec> gens) {
    if (gens.empty()) throw InputError("semigroup needs at least one generator");
    const int d = int(gens[0].size());
    if (d == 0) throw InputError("semigroup generators must be nonempty vectors");
    for (const IVec& g : gens) {
        if (int(g.size()) != d) throw InputError("semigroup generators have mixed lengths");
        bool zero = true;
        for (long long e : g) {
            if (e < 0)
                throw InputError("semigroup generator " + vec_str(g) +
                                 " has a negative entry");
            if (e != 0) zero = false;
        }
        if (zero) throw InputError("the zero vector cannot be a minimal generator");
    }
    AffineSemigroup s;
    s.d = d;
    // deduplicate, preserving first occurrence
    for (const IVec& g : gens) {
        if (std::find(s.gens.begin(), s.gens.end(), g) == s.gens.end())
            s.gens.push_back(g);
        else
            s.warnings.push_back("duplicate generator " + vec_str(g) + " removed");
    }
    // homogeneity: solve lambda . g = 1 for all generators
    {
        std::vector<std::vector<Rat>> A;
        std::vector<Rat> b;
        for (const IVec& g : s.gens) {
            std::vector<Rat> row(d);
            for (int i = 0; i < d; ++i) row[i] = Rat(long(g[i]));
            A.push_back(std::move(row));
            b.push_back(Rat(1));
        }
        auto sol = solve_rational(A, b);
        if (!sol) {
            // witness: the first generator whose equation is inconsistent with
            // the ones before it
            for (size_t k = 1; k < s.gens.size(); ++k) {
                std::vector<std::vector<Rat>> Ak(A.begin(), A.begin() + k + 1);
                std::vector<Rat> bk(b.begin(), b.begin() + k + 1);
                if (!solve_rational(Ak, bk))
                    throw InputError(
                        "semigroup is not homogeneous: no grading functional puts "
                        "generator " + vec_str(s.gens[k]) +
                        " on the degree-1 hyperplane");
            }
            throw InputError("semigroup is not homogeneous");
        }
        s.lambda = *sol;
    }
    s.lattice = std::make_shared<Lattice>(d, s.gens);
    // minimality: a generator contained in the semigroup generated by the
    // others is redundant (homogeneity makes this equivalent to duplication,
    // but the membership check keeps the contract honest)
    {
        std::vector<IVec> minimal;
        for (size_t k = 0; k < s.gens.size(); ++k) {
            AffineSemigroup probe;
            probe.d = d;
            probe.lambda = s.lambda;
            probe.lattice = s.lattice;
            for (size_t j = 0; j < s.gens.size(); ++j)
                if (j != k) probe.gens.push_back(s.gens[j]);
            MembershipOracle oracle(probe);
            if (oracle.contains(s.gens[k]))
                s.warnings.push_back("generator " + vec_str(s.gens[k]) +
                                     " is redundant; removed");
            else
                minimal.push_back(s.gens[k]);
        }
        s.gens = std::move(minimal);
        if (s.gens.empty()) throw InputError("no generators left after minimization");
    }
    return s;
}

AffineSemigroup numerical_curve(const std::vector<long long>& exponents) {
    if (exponents.empty()) throw InputError("numerical curve needs at least one exponent");
    std::vector<IVec> gens;
    for (long long e : exponents) {
        if (e < 0) throw InputError("numerical-curve exponents must be nonnegative");
        gens.push_back({1, e});
    }
    return validate_semigroup(std::move(gens));
}

// ---------------------------------------------------------------------------
// membership

size_t MembershipOracle::H::operator()(const IVec& v) const {
    size_t h = 1469598103934665603ull;
    for (long long e : v) {
        h ^= size_t(uint64_t(e));
        h *= 1099511628211ull;
    }
    return h;
}

MembershipOracle::MembershipOracle(const AffineSemigroup& s) : s_(s) {
    if (s.d == 2) {
        curveShape_ = true;
        for (const IVec& g : s.gens)
            if (g[0] != 1) curveShape_ = false;
        if (curveShape_ && !s.gens.empty()) {
            eMin_ = s.gens[0][1];
            for (const IVec& g : s.gens) eMin_ = std::min(eMin_, g[1]);
            for (const IVec& g : s.gens)
                if (g[1] != eMin_) coins_.push_back(g[1] - eMin_);
            std::sort(coins_.begin(), coins_.end());
            minParts_.assign(1, 0);
        }
        if (coins_.empty()) curveShape_ = false;  // single ray; generic path is fine
    }
}

void MembershipOracle::grow_coin_table(long long upTo) {
    if (upTo < (long long)minParts_.size()) return;
    if (upTo > 200'000'000)
        throw ResourceError("membership table would exceed the memory guard");
    size_t old = minParts_.size();
    minParts_.resize(size_t(upTo) + 1, UINT16_MAX);
    for (size_t m = old; m < minParts_.size(); ++m) {
        uint32_t best = UINT16_MAX;
        for (long long c : coins_) {
            if (c > (long long)m) break;
            uint32_t cand = minParts_[m - c];
            if (cand != UINT16_MAX && cand + 1 < best) best = cand + 1;
        }
        minParts_[m] = uint16_t(best);
    }
}

bool MembershipOracle::contains(const IVec& a) { return contains(a, nullptr); }

bool MembershipOracle::contains(const IVec& a, std::vector<int>* cert) {
    if (int(a.size()) != s_.d) throw InputError("membership query length mismatch");
    if (cert) cert->clear();
    for (long long e : a)
        if (e < 0) return false;
    auto deg = s_.degree_of(a);
    if (!deg) return false;
    if (curveShape_ && !cert) {
        long long k = a[0];
        long long m = a[1] - k * eMin_;
        if (m < 0) return false;
        grow_coin_table(m);
        return minParts_[m] != UINT16_MAX && minParts_[m] <= k;
    }
    if (!member(a)) return false;
    if (cert) {
        IVec cur = a;
        while (!std::all_of(cur.begin(), cur.end(), [](long long e) { return e == 0; })) {
            int g = memo_.at(cur);
            cert->push_back(g);
            cur = vsub(cur, s_.gens[g]);
        }
        std::sort(cert->begin(), cert->end());
    }
    return true;
}

bool MembershipOracle::member(const IVec& a) {
    bool zero = std::all_of(a.begin(), a.end(), [](long long e) { return e == 0; });
    if (zero) return true;
    auto it = memo_.find(a);
    if (it != memo_.end()) return it->second >= 0;
    if (memo_.size() > 50'000'000)
        throw ResourceError("membership memo exceeded the memory guard");
    int witness = -1;
    for (int g = 0; g < int(s_.gens.size()) && witness < 0; ++g) {
        bool ok = true;
        for (int i = 0; i < s_.d; ++i)
            if (a[i] < s_.gens[g][i]) { ok = false; break; }
        if (ok && member(vsub(a, s_.gens[g]))) witness = g;
    }
    memo_[a] = witness;
    return witness >= 0;
}

// ---------------------------------------------------------------------------
// cone geometry

namespace {

// distinct primitive ray data not needed: generators all lie on lambda = 1,
// so they are pairwise non-proportional already.

std::vector<int> extremal_d2(const AffineSemigroup& s) {
    std::vector<int> idx(s.gens.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        long long c = cross2(s.gens[a], s.gens[b]);
        if (c != 0) return c > 0;
        return a < b;
    });
    if (idx.size() == 1) return {idx[0]};
    return {idx.front(), idx.back()};
}

// rational 2D coordinates of the generators inside the hyperplane lambda = 1
// (d = 3): x = o + alpha*u + beta*v
struct PlaneCoords {
    std::vector<std::pair<Rat, Rat>> pts;
    bool collinear = false;
};

PlaneCoords plane_coords(const AffineSemigroup& s) {
    PlaneCoords pc;
    const auto& g = s.gens;
    const IVec& o = g[0];
    int iu = -1, iv = -1;
    // first generator独立 of o
    for (size_t i = 1; i < g.size(); ++i) {
        if (g[i] != o) { iu = int(i); break; }
    }
    if (iu < 0) {
        pc.collinear = true;
        return pc;
    }
    IVec u = vsub(g[iu], o);
    for (size_t i = 1; i < g.size(); ++i) {
        IVec w = vsub(g[i], o);
        // w independent of u ?
        bool dep = true;
        for (int a = 0; a < 3 && dep; ++a)
            for (int b = a + 1; b < 3 && dep; ++b)
                if (u[a] * w[b] - u[b] * w[a] != 0) dep = false;
        if (!dep) { iv = int(i); break; }
    }
    if (iv < 0) {
        // all points on a line in the plane
        pc.collinear = true;
        for (size_t i = 0; i < g.size(); ++i) {
            IVec w = vsub(g[i], o);
            // w = alpha * u: take alpha from any nonzero coordinate of u
            Rat alpha(0);
            for (int a = 0; a < 3; ++a)
                if (u[a] != 0) { alpha = Rat(long(w[a]), long(u[a])); break; }
            alpha.canonicalize();
            pc.pts.emplace_back(alpha, Rat(0));
        }
        return pc;
    }
    IVec v = vsub(g[iv], o);
    for (size_t i = 0; i < g.size(); ++i) {
        IVec w = vsub(g[i], o);
        std::vector<std::vector<Rat>> A(3, std::vector<Rat>(2));
        std::vector<Rat> b(3);
        for (int r = 0; r < 3; ++r) {
            A[r][0] = Rat(long(u[r]));
            A[r][1] = Rat(long(v[r]));
            b[r] = Rat(long(w[r]));
        }
        auto sol = solve_rational(A, b);
        if (!sol) throw InternalError("generator not in the affine span of the slice");
        pc.pts.emplace_back((*sol)[0], (*sol)[1]);
    }
    return pc;
}

std::vector<int> convex_hull_indices(const std::vector<std::pair<Rat, Rat>>& pts) {
    std::vector<int> idx(pts.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (pts[a].first != pts[b].first) return pts[a].first < pts[b].first;
        return pts[a].second < pts[b].second;
    });
    auto cross = [&](int o, int a, int b) {
        Rat v = (pts[a].first - pts[o].first) * (pts[b].second - pts[o].second) -
                (pts[a].second - pts[o].second) * (pts[b].first - pts[o].first);
        return v > 0 ? 1 : (v < 0 ? -1 : 0);
    };
    std::vector<int> hull;
    for (int pass = 0; pass < 2; ++pass) {
        size_t start = hull.size();
        for (int i : idx) {
            while (hull.size() >= start + 2 &&
                   cross(hull[hull.size() - 2], hull[hull.size() - 1], i) <= 0)
                hull.pop_back();
            hull.push_back(i);
        }
        hull.pop_back();
        std::reverse(idx.begin(), idx.end());
    }
    return hull;  // counterclockwise, no repeats
}

}  // namespace

std::vector<int> extremal_rays(const AffineSemigroup& s) {
    const int n = int(s.gens.size());
    if (n == 1) return {0};
    switch (s.d) {
        case 1:
            return {0};  // homogeneous in N^1 forces a single generator
        case 2:
            return extremal_d2(s);
        case 3: {
            PlaneCoords pc = plane_coords(s);
            if (pc.collinear) {
                // segment: endpoints by the 1D parameter
                int lo = 0, hi = 0;
                for (int i = 1; i < n; ++i) {
                    if (pc.pts[i].first < pc.pts[lo].first) lo = i;
                    if (pc.pts[i].first > pc.pts[hi].first) hi = i;
                }
                if (lo == hi) return {lo};
                return lo < hi ? std::vector<int>{lo, hi} : std::vector<int>{hi, lo};
            }
            auto hull = convex_hull_indices(pc.pts);
            std::sort(hull.begin(), hull.end());
            return hull;
        }
        default: break;
    }
    // d > 3: handle simplicial cones by searching a spanning independent subset
    const int r = s.lattice_rank();
    if (n > 15)
        throw InputError("extremal rays unsupported: dimension > 3 with more than "
                         "15 generators");
    std::vector<int> subset;
    std::vector<int> result;
    std::function<bool(int, int)> search = [&](int start, int need) -> bool {
        if (need == 0) {
            // check every generator is a nonnegative rational combination
            for (int g = 0; g < n; ++g) {
                std::vector<std::vector<Rat>> A(s.d, std::vector<Rat>(subset.size()));
                std::vector<Rat> b(s.d);
                for (int row = 0; row < s.d; ++row) {
                    for (size_t c = 0; c < subset.size(); ++c)
                        A[row][c] = Rat(long(s.gens[subset[c]][row]));
                    b[row] = Rat(long(s.gens[g][row]));
                }
                auto sol = solve_rational(A, b);
                if (!sol) return false;
                for (const Rat& x : *sol)
                    if (x < 0) return false;
            }
            result = subset;
            return true;
        }
        for (int i = start; i <= n - need; ++i) {
            subset.push_back(i);
            if (search(i + 1, need - 1)) return true;
            subset.pop_back();
        }
        return false;
    };
    if (!search(0, r))
        throw InputError(
            "extremal rays unsupported for non-simplicial cones in dimension " +
            std::to_string(s.d));
    return result;
}

ConeFacets cone_facets(const AffineSemigroup& s) {
    ConeFacets cf;
    auto ext = extremal_rays(s);
    switch (s.d) {
        case 1:
            cf.normals.push_back({1});
            return cf;
        case 2: {
            if (ext.size() == 1) {
                // single ray: x in cone iff x is a nonnegative multiple
                const IVec& e = s.gens[ext[0]];
                cf.normals.push_back({e[1], -e[0]});
                cf.normals.push_back({-e[1], e[0]});
                // plus a halfplane to pin nonnegative multiples
                cf.normals.push_back(e);
                return cf;
            }
            const IVec& e1 = s.gens[ext[0]];
            const IVec& e2 = s.gens[ext[1]];
            // inward normals: rot(e1) = (-y, x) sign-fixed against the other ray
            IVec n1 = {-e1[1], e1[0]};
            if (n1[0] * e2[0] + n1[1] * e2[1] < 0) { n1[0] = -n1[0]; n1[1] = -n1[1]; }
            IVec n2 = {-e2[1], e2[0]};
            if (n2[0] * e1[0] + n2[1] * e1[1] < 0) { n2[0] = -n2[0]; n2[1] = -n2[1]; }
            cf.normals.push_back(n1);
            cf.normals.push_back(n2);
            return cf;
        }
        case 3: {
            if (ext.size() < 3)
                throw InputError("cone facets need a full-dimensional cone (d = 3)");
            PlaneCoords pc = plane_coords(s);
            if (pc.collinear)
                throw InputError("cone facets need a full-dimensional cone (d = 3)");
            auto hull = convex_hull_indices(pc.pts);
            const int h = int(hull.size());
            for (int k = 0; k < h; ++k) {
                const IVec& a = s.gens[hull[k]];
                const IVec& b = s.gens[hull[(k + 1) % h]];
                IVec nrm = {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                            a[0] * b[1] - a[1] * b[0]};
                // orient inward using any generator off the facet
                long long side = 0;
                for (const IVec& g : s.gens) {
                    side = nrm[0] * g[0] + nrm[1] * g[1] + nrm[2] * g[2];
                    if (side != 0) break;
                }
                if (side < 0)
                    for (auto& c : nrm) c = -c;
                cf.normals.push_back(nrm);
            }
            return cf;
        }
        default:
            throw InputError("cone facets unsupported in dimension " +
                             std::to_string(s.d));
    }
}

bool ConeFacets::contains(const IVec& x) const {
    for (const IVec& n : normals) {
        long long v = 0;
        for (size_t i = 0; i < n.size(); ++i) v += n[i] * x[i];
        if (v < 0) return false;
    }
    return true;
}

long long default_hole_bound(const AffineSemigroup& s) {
    long long mx = 1;
    for (const IVec& g : s.gens)
        for (long long e : g) mx = std::max(mx, e);
    return 3 * mx;
}

HoleReport holes_box(const AffineSemigroup& s, long long bound) {
    if (s.d > 3)
        throw InputError("hole enumeration unsupported in dimension " +
                         std::to_string(s.d));
    HoleReport rep;
    rep.bound = bound;
    ConeFacets cf = cone_facets(s);
    MembershipOracle oracle(s);
    auto ext = extremal_rays(s);

    std::vector<IVec> holes;
    long long budget = 50'000'000;
    for (long long k = 0; k <= bound; ++k) {
        IVec lo(s.d), hi(s.d);
        for (int c = 0; c < s.d; ++c) {
            long long l = s.gens[0][c], h = s.gens[0][c];
            for (const IVec& g : s.gens) {
                l = std::min(l, g[c]);
                h = std::max(h, g[c]);
            }
            lo[c] = l * k;
            hi[c] = h * k;
        }
        IVec p = lo;
        while (true) {
            if (--budget < 0) throw ResourceError("hole enumeration box too large");
            Rat l = s.lambda_of(p);
            if (l == Rat(long(k)) && cf.contains(p) && s.lattice->contains(p) &&
                !oracle.contains(p))
                holes.push_back(p);
            int c = 0;
            while (c < s.d && ++p[c] > hi[c]) {
                p[c] = lo[c];
                ++c;
            }
            if (c == s.d) break;
        }
    }

    std::set<IVec> holeSet(holes.begin(), holes.end());
    for (const IVec& h : holes) {
        HoleReport::Hole entry;
        entry.point = h;
        if (s.d == 2) {
            for (int ei : ext) {
                const IVec& dir = s.gens[ei];
                bool clean = true;
                for (int sign : {1, -1}) {
                    IVec p = h;
                    while (true) {
                        for (int c = 0; c < s.d; ++c) p[c] += sign * dir[c];
                        auto deg = s.degree_of(p);
                        if (!deg || *deg > bound || !cf.contains(p)) break;
                        if (!s.lattice->contains(p)) continue;
                        if (oracle.contains(p)) {
                            clean = false;
                            break;
                        }
                    }
                    if (!clean) break;
                }
                if (clean) entry.familyDirs.push_back(ei);
            }
            if (entry.familyDirs.empty()) rep.everyHoleInMaxFamily = false;
        }
        rep.holes.push_back(std::move(entry));
    }
    return rep;
}

int outside_ray_witness(const AffineSemigroup& s, const IVec& x) {
    if (s.d != 2) throw InputError("outside-ray witness implemented for d = 2 only");
    if (!s.lattice->contains(x)) throw InputError("point is not in the group ZS");
    auto ext = extremal_rays(s);
    if (ext.size() != 2) throw InputError("outside-ray witness needs a 2D cone");
    ConeFacets cf = cone_facets(s);
    if (cf.contains(x)) throw InputError("point lies inside the cone");
    // facet normals are listed in extremal-ray order: normals[k] vanishes on
    // the ray of ext[k]; the shifted ray keeps the violated functional fixed
    for (size_t k = 0; k < ext.size(); ++k) {
        const IVec& n = cf.normals[k];
        long long v = n[0] * x[0] + n[1] * x[1];
        if (v < 0) return ext[k];
    }
    throw InternalError("no violated facet found for an outside point");
}

// ---------------------------------------------------------------------------
// toric ideal

std::vector<std::string> default_toric_names(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::vector<Poly> toric_ideal(const AffineSemigroup& s,
                              std::vector<std::string> varNames, const Limits& lim,
                              RingPtr* outRing) {
    const int n = int(s.gens.size());
    const int d = s.d;
    if (int(varNames.size()) != n)
        throw InputError("toric ideal needs one variable name per generator");

    std::vector<std::string> elimVars;
    for (int i = 1; i <= d; ++i) {
        std::string t = "t" + std::to_string(i);
        while (std::find(varNames.begin(), varNames.end(), t) != varNames.end())
            t = "_" + t;
        elimVars.push_back(t);
    }
    std::vector<std::string> all = elimVars;
    all.insert(all.end(), varNames.begin(), varNames.end());
    RingPtr big = make_ring(all, TermOrder{OrderKind::Block, d});

    std::vector<Poly> rels;
    for (int j = 0; j < n; ++j) {
        Expo xm(d + n, 0), tm(d + n, 0);
        xm[d + j] = 1;
        for (int i = 0; i < d; ++i) {
            if (s.gens[j][i] > std::numeric_limits<int32_t>::max())
                throw ResourceError("generator " + vec_str(s.gens[j]) +
                                    " has an exponent beyond the machine range");
            tm[i] = int32_t(s.gens[j][i]);
        }
        rels.push_back(Poly::from_terms(
            big, {{Rat(1), std::move(xm)}, {Rat(-1), std::move(tm)}}));
    }
    std::vector<Poly> elim;
    try {
        elim = eliminate(rels, d, lim);
    } catch (const ResourceError& e) {
        long long mx = 0;
        int arg = 0;
        for (int j = 0; j < n; ++j)
            for (long long c : s.gens[j])
                if (c > mx) { mx = c; arg = j; }
        throw ResourceError(std::string(e.what()) +
                            " while eliminating the parameter block (largest "
                            "generator " + vec_str(s.gens[arg]) + ")");
    }

    // target ring: the x-variables with the generator matrix as multigrading
    std::vector<std::vector<int64_t>> multi(d, std::vector<int64_t>(n));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) multi[i][j] = s.gens[j][i];
    RingPtr ring = make_ring(varNames, TermOrder{OrderKind::DegRevLex},
                             std::vector<int64_t>(n, 1), multi);
    if (outRing) *outRing = ring;

    std::vector<Poly> out;
    for (const Poly& g : elim) {
        std::vector<Term> ts;
        for (const Term& t : g.terms()) {
            Expo m(n);
            for (int j = 0; j < n; ++j) m[j] = t.m[d + j];
            ts.push_back({t.c, std::move(m)});
        }
        Poly p = Poly::from_terms(ring, std::move(ts));
        if (p.size() != 2)
            throw InternalError("toric ideal generator is not a binomial: " + p.str());
        if (!p.multidegree())
            throw InternalError("toric ideal generator is not multigraded: " + p.str());
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace ringtrace
