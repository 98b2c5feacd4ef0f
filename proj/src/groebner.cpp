#include "ringtrace/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ringtrace/errors.hpp"

namespace ringtrace {

namespace {

int64_t shifted_deg(const FreeModule& fm, const Expo& m, int comp) {
    return fm.ring->wdeg(m) + fm.shifts[comp];
}

// v with its leading term removed
Vec drop_lead(const Vec& v) {
    std::vector<MTerm> rest(v.terms().begin() + 1, v.terms().end());
    Vec r(v.module());
    r.assign_sorted(std::move(rest));
    return r;
}

// Full reduction of v against basis; lowest-index reducer, all terms reduced.
// byComp[c] lists basis indices with leading component c, in index order.
Vec reduce_full(const Vec& v, const std::vector<Vec>& basis,
                const std::vector<std::vector<int>>& byComp, const Limits& lim,
                std::vector<std::pair<int, Poly>>* quot) {
    const FreeModule& fm = *v.module();
    std::map<int, std::vector<Term>> qacc;
    std::vector<MTerm> out;
    Vec r = v;
    while (!r.is_zero()) {
        const MTerm& t = r.lead();
        if (shifted_deg(fm, t.m, t.comp) > lim.degreeCap)
            throw ResourceError("reduction degree cap exceeded (degree " +
                                std::to_string(shifted_deg(fm, t.m, t.comp)) + " > " +
                                std::to_string(lim.degreeCap) + ")");
        int red = -1;
        if (t.comp < int(byComp.size())) {
            for (int k : byComp[t.comp]) {
                if (expo_divides(basis[k].lead().m, t.m)) {
                    red = k;
                    break;
                }
            }
        }
        if (red < 0) {
            out.push_back(t);
            r = drop_lead(r);
        } else {
            const Vec& g = basis[red];
            Rat q = t.c / g.lead().c;
            Expo qm = expo_div(t.m, g.lead().m);
            r = sub_scaled(r, q, qm, g);
            if (quot) qacc[red].push_back({std::move(q), std::move(qm)});
        }
    }
    if (quot) {
        for (auto& [k, terms] : qacc)
            quot->emplace_back(k, Poly::from_terms(fm.ring, std::move(terms)));
    }
    Vec nf(v.module());
    nf.assign_sorted(std::move(out));
    return nf;
}

std::vector<std::vector<int>> index_by_component(const std::vector<Vec>& basis, int rank) {
    std::vector<std::vector<int>> byComp(rank);
    for (int i = 0; i < int(basis.size()); ++i)
        byComp[basis[i].lead().comp].push_back(i);
    return byComp;
}

// True if every term of v sits in its leading component (the element is a
// polynomial times a basis vector). The coprime criterion is only valid for
// such elements.
bool pure_component(const Vec& v) {
    int c = v.lead().comp;
    for (const MTerm& t : v.terms())
        if (t.comp != c) return false;
    return true;
}

// Buchberger worker over a free module, with optional cofactor tracking for
// syzygy extraction. Tracked mode requires the full generator list up front.
class GBWorker {
  public:
    // untracked, incremental
    GBWorker(FreeModulePtr fm, const Limits& lim)
        : fm_(std::move(fm)), lim_(lim), track_(false),
          byComp_(fm_->rank()) {}

    // tracked
    GBWorker(const std::vector<Vec>& gens, FreeModulePtr genmod, const Limits& lim,
             SyzPolicy policy)
        : fm_(gens.empty() ? nullptr : gens.front().module()), lim_(lim), track_(true),
          policy_(policy), genmod_(std::move(genmod)) {
        if (!fm_) throw InternalError("tracked worker needs at least one generator");
        byComp_.resize(fm_->rank());
        for (int j = 0; j < int(gens.size()); ++j) {
            if (!same_module(gens[j].module(), fm_))
                throw InputError("generators live in different free modules");
            if (gens[j].is_zero()) {
                syz_.push_back(Vec::unit(genmod_, j));
                continue;
            }
            const Rat lc = gens[j].lead().c;
            insert_element(gens[j].monic(),
                           Vec::unit(genmod_, j).scaled(Rat(1) / lc));
        }
    }

    void add(const Vec& v) {
        if (track_) throw InternalError("tracked worker is not incremental");
        if (v.is_zero()) return;
        if (!same_module(v.module(), fm_))
            throw InputError("generators live in different free modules");
        insert_element(v.monic(), Vec());
    }

    void complete() {
        while (!pairs_.empty()) {
            if (++processed_ > lim_.pairCap)
                throw ResourceError("S-pair cap exceeded (" +
                                    std::to_string(lim_.pairCap) + " pairs)");
            Pair p = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            if (p.deg > lim_.degreeCap)
                throw ResourceError("S-pair degree cap exceeded (degree " +
                                    std::to_string(p.deg) + " > " +
                                    std::to_string(lim_.degreeCap) + ")");
            process_pair(p);
        }
    }

    const std::vector<Vec>& basis() const { return g_; }

    Vec normal_form(const Vec& v, std::vector<std::pair<int, Poly>>* quot = nullptr) const {
        return reduce_full(v, g_, byComp_, lim_, quot);
    }

    std::vector<Vec> take_syzygies() { return std::move(syz_); }

  private:
    struct Pair {
        int64_t deg;
        int i, j;  // i < j
        Expo lcm;
        bool operator<(const Pair& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (j != o.j) return j < o.j;
            return i < o.i;
        }
    };

    void process_pair(const Pair& p) {
        const Vec& gi = g_[p.i];
        const Vec& gj = g_[p.j];
        Expo ui = expo_div(p.lcm, gi.lead().m);
        Expo uj = expo_div(p.lcm, gj.lead().m);
        // basis elements are monic: spoly = x^ui gi - x^uj gj
        Vec s = sub_scaled(gi.times_term(Rat(1), ui), Rat(1), uj, gj);
        std::vector<std::pair<int, Poly>> quot;
        Vec r = reduce_full(s, g_, byComp_, lim_, track_ ? &quot : nullptr);
        if (r.is_zero()) {
            if (track_) syz_.push_back(relation(p, ui, uj, quot));
            return;
        }
        const Rat lc = r.lead().c;
        Vec cof;
        if (track_) cof = relation(p, ui, uj, quot).scaled(Rat(1) / lc);
        insert_element(r.monic(), std::move(cof));
    }

    // u_i cof_i - u_j cof_j - sum quot_k cof_k  (the generator-level content of
    // the processed pair); used both for syzygies and new-element cofactors.
    Vec relation(const Pair& p, const Expo& ui, const Expo& uj,
                 const std::vector<std::pair<int, Poly>>& quot) {
        Vec rel = cof_[p.i].times_term(Rat(1), ui) - cof_[p.j].times_term(Rat(1), uj);
        for (const auto& [k, q] : quot) rel = rel - poly_times_vec(q, cof_[k]);
        return rel;
    }

    void insert_element(Vec h, Vec cof) {
        const int t = int(g_.size());
        const Expo& mt = h.lead().m;
        const int ct = h.lead().comp;
        const bool pure_t = pure_component(h);

        // Candidate pairs with the new element, pruned by the Gebauer-Moeller
        // criteria (first kept lcm wins among divisible/equal lcms).
        struct Cand {
            Expo lcm;
            int i;
            bool coprime;
        };
        std::vector<Cand> cands;
        for (int i = 0; i < t; ++i) {
            if (g_[i].lead().comp != ct) continue;
            cands.push_back({expo_lcm(g_[i].lead().m, mt), i,
                             pure_t && pure_component(g_[i]) &&
                                 expo_coprime(g_[i].lead().m, mt)});
        }
        if (policy_ == SyzPolicy::GebauerMoeller) {
            const Ring& R = *fm_->ring;
            std::stable_sort(cands.begin(), cands.end(), [&](const Cand& a, const Cand& b) {
                int64_t da = R.wdeg(a.lcm), db = R.wdeg(b.lcm);
                if (da != db) return da < db;
                if (a.lcm != b.lcm) return a.lcm < b.lcm;
                return a.i < b.i;
            });
            std::vector<Cand> kept;
            for (const Cand& c : cands) {
                bool drop = false;
                for (const Cand& k : kept) {
                    if (expo_divides(k.lcm, c.lcm)) {
                        drop = true;
                        break;
                    }
                }
                if (!drop) kept.push_back(c);
            }
            cands = std::move(kept);
            // Chain criterion on queued pairs: (i,j) is redundant once
            // lt(h) | lcm(i,j) with both new lcms strictly smaller.
            for (auto it = pairs_.begin(); it != pairs_.end();) {
                const Pair& q = *it;
                if (g_[q.i].lead().comp == ct && expo_divides(mt, q.lcm) &&
                    expo_lcm(g_[q.i].lead().m, mt) != q.lcm &&
                    expo_lcm(g_[q.j].lead().m, mt) != q.lcm) {
                    it = pairs_.erase(it);
                } else {
                    ++it;
                }
            }
        }
        for (const Cand& c : cands) {
            if (c.coprime && policy_ == SyzPolicy::GebauerMoeller) {
                // S-pair reduces to zero; its content is the Koszul relation.
                if (track_) {
                    Poly pi = g_[c.i].component(g_[c.i].lead().comp);
                    Poly pt = h.component(ct);
                    syz_.push_back(poly_times_vec(pt, cof_[c.i]) -
                                   poly_times_vec(pi, cof));
                }
                continue;
            }
            pairs_.insert({shifted_deg(*fm_, c.lcm, ct), c.i, t, c.lcm});
        }

        byComp_[ct].push_back(t);
        g_.push_back(std::move(h));
        if (track_) cof_.push_back(std::move(cof));
    }

    FreeModulePtr fm_;
    Limits lim_;
    bool track_;
    SyzPolicy policy_ = SyzPolicy::GebauerMoeller;
    FreeModulePtr genmod_;
    std::vector<Vec> g_;
    std::vector<Vec> cof_;
    std::vector<Vec> syz_;
    std::vector<std::vector<int>> byComp_;
    std::set<Pair> pairs_;
    size_t processed_ = 0;
};

FreeModulePtr rank_one(const RingPtr& ring) {
    return make_free_module(ring, {0});
}

Vec embed(const Poly& p, const FreeModulePtr& fm) {
    return Vec::poly_times_unit(fm, p, 0);
}

}  // namespace

// ---------------------------------------------------------------------------

// Free module S^t whose shifts are the degrees of the generators (when all
// homogeneous) and whose mshifts are their multidegrees (when available).
FreeModulePtr make_generator_module(const std::vector<Vec>& gens) {
    const RingPtr& ring = gens.front().ring();
    std::vector<int64_t> shifts(gens.size(), 0);
    bool homog = true;
    for (size_t j = 0; j < gens.size(); ++j) {
        int64_t d = 0;
        if (!gens[j].is_homogeneous(&d)) homog = false;
        shifts[j] = d;
    }
    if (!homog) shifts.assign(gens.size(), 0);
    std::vector<std::vector<int64_t>> mshifts;
    if (ring->has_multigrading() && homog) {
        mshifts.reserve(gens.size());
        for (const Vec& g : gens) {
            auto md = g.multidegree();
            if (!md) {
                mshifts.clear();
                break;
            }
            mshifts.push_back(*md);
        }
        if (mshifts.size() != gens.size()) mshifts.clear();
    }
    return make_free_module(ring, std::move(shifts), std::move(mshifts));
}


std::vector<Vec> module_groebner(const std::vector<Vec>& gens, const Limits& lim) {
    std::vector<Vec> nonzero;
    for (const Vec& g : gens)
        if (!g.is_zero()) nonzero.push_back(g);
    if (nonzero.empty()) return {};
    GBWorker w(nonzero.front().module(), lim);
    for (const Vec& g : nonzero) w.add(g);
    w.complete();
    return w.basis();
}

Vec normal_form_vec(const Vec& v, const std::vector<Vec>& gb, const Limits& lim) {
    if (gb.empty()) return v;
    auto byComp = index_by_component(gb, v.module()->rank());
    return reduce_full(v, gb, byComp, lim, nullptr);
}

std::vector<Vec> syzygies(const std::vector<Vec>& columns, const Limits& lim,
                          SyzPolicy policy) {
    if (columns.empty()) return {};
    FreeModulePtr genmod = make_generator_module(columns);
    GBWorker w(columns, genmod, lim, policy);
    w.complete();
    auto syz = w.take_syzygies();
    // deterministic order: ascending degree, then emission order
    std::stable_sort(syz.begin(), syz.end(), [](const Vec& a, const Vec& b) {
        return a.degree() < b.degree();
    });
    return syz;
}

std::vector<Vec> kernel_mod_ideal(const std::vector<Vec>& columns,
                                  const std::vector<Poly>& idealGens,
                                  const GroebnerBasis& gbJ, const Limits& lim,
                                  SyzPolicy policy) {
    if (columns.empty()) return {};
    const FreeModulePtr& target = columns.front().module();
    const int t = int(columns.size());
    std::vector<Vec> aug = columns;
    for (const Poly& g : idealGens)
        for (int c = 0; c < target->rank(); ++c)
            aug.push_back(Vec::poly_times_unit(target, g, c));
    auto syz = syzygies(aug, lim, policy);

    FreeModulePtr genmod = make_generator_module(columns);
    std::vector<Vec> out;
    for (const Vec& s : syz) {
        std::vector<MTerm> kept;
        for (const MTerm& mt : s.terms())
            if (mt.comp < t) kept.push_back(mt);
        Vec pr = Vec::from_terms(genmod, std::move(kept));
        if (pr.is_zero()) continue;
        // reduce each coordinate modulo J
        std::vector<Poly> comps = pr.components();
        for (Poly& p : comps) p = normal_form(p, gbJ);
        Vec red = Vec::from_components(genmod, comps);
        if (red.is_zero()) continue;
        if (std::find(out.begin(), out.end(), red) == out.end())
            out.push_back(std::move(red));
    }
    return out;
}

std::vector<Vec> minimal_generators(const std::vector<Vec>& gens, const Limits& lim) {
    std::vector<Vec> in;
    for (const Vec& g : gens)
        if (!g.is_zero()) in.push_back(g);
    if (in.empty()) return {};
    for (const Vec& g : in)
        if (!g.is_homogeneous())
            throw InputError("minimal generator extraction requires homogeneous input");
    std::vector<int> order(in.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return in[a].degree() < in[b].degree(); });
    GBWorker w(in.front().module(), lim);
    std::vector<Vec> kept;
    for (int idx : order) {
        if (!w.normal_form(in[idx]).is_zero()) {
            kept.push_back(in[idx]);
            w.add(in[idx]);
            w.complete();
        }
    }
    return kept;
}

// ---------------------------------------------------------------------------
// Ideal-level wrappers

namespace {

// Inter-reduce a monic module GB of a rank-1 module into the reduced GB.
std::vector<Poly> reduce_ideal_basis(std::vector<Vec> basis, const RingPtr& ring,
                                     const Limits& lim) {
    // minimal: drop elements whose lead is divisible by another's lead
    std::vector<Vec> min;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Expo &mi = basis[i].lead().m, &mj = basis[j].lead().m;
            if (expo_divides(mj, mi) && (mj != mi || j < i)) redundant = true;
        }
        if (!redundant) min.push_back(basis[i]);
    }
    // tail-reduce to a fixpoint
    for (int round = 0;; ++round) {
        if (round > 1000) throw InternalError("inter-reduction did not stabilise");
        bool changed = false;
        for (size_t i = 0; i < min.size(); ++i) {
            std::vector<Vec> others;
            for (size_t j = 0; j < min.size(); ++j)
                if (j != i) others.push_back(min[j]);
            Vec r = normal_form_vec(min[i], others, lim);
            r = r.monic();
            if (r != min[i]) {
                if (r.is_zero()) throw InternalError("minimal GB element reduced to zero");
                min[i] = r;
                changed = true;
            }
        }
        if (!changed) break;
    }
    std::sort(min.begin(), min.end(), [&](const Vec& a, const Vec& b) {
        return ring->cmp(a.lead().m, b.lead().m) < 0;
    });
    std::vector<Poly> out;
    out.reserve(min.size());
    for (const Vec& v : min) out.push_back(v.component(0));
    return out;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Poly>& gens, const Limits& lim) {
    RingPtr ring;
    for (const Poly& g : gens)
        if (!g.is_zero()) {
            ring = g.ring();
            break;
        }
    if (!ring) {
        GroebnerBasis gb;
        if (!gens.empty()) gb.ring = gens.front().ring();
        return gb;
    }
    for (const Poly& g : gens)
        if (!same_ring(g.ring(), ring))
            throw InputError("generators live in different ambient rings");
    FreeModulePtr fm = rank_one(ring);
    GBWorker w(fm, lim);
    for (const Poly& g : gens)
        if (!g.is_zero()) w.add(embed(g, fm));
    w.complete();
    GroebnerBasis gb;
    gb.ring = ring;
    gb.gens = reduce_ideal_basis(w.basis(), ring, lim);
    return gb;
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb, std::vector<Poly>* quot) {
    if (quot) quot->assign(gb.gens.size(), Poly::zero(f.ring()));
    if (gb.gens.empty()) return f;
    if (!same_ring(f.ring(), gb.ring))
        throw InputError("polynomial and basis live in different ambient rings");
    std::vector<Term> out;
    Poly r = f;
    while (!r.is_zero()) {
        const Term& t = r.lead();
        int red = -1;
        for (int k = 0; k < int(gb.gens.size()); ++k) {
            if (expo_divides(gb.gens[k].lead().m, t.m)) {
                red = k;
                break;
            }
        }
        if (red < 0) {
            out.push_back(t);
            std::vector<Term> rest(r.terms().begin() + 1, r.terms().end());
            r = Poly::from_terms_sorted(f.ring(), std::move(rest));
        } else {
            const Poly& g = gb.gens[red];
            Rat q = t.c / g.lead().c;
            Expo qm = expo_div(t.m, g.lead().m);
            if (quot) (*quot)[red] = (*quot)[red] + Poly::monomial(f.ring(), q, qm);
            r = sub_scaled(r, q, qm, g);
        }
    }
    return Poly::from_terms_sorted(f.ring(), std::move(out));
}

std::vector<Poly> eliminate(const std::vector<Poly>& gens, int blockVars,
                            const Limits& lim) {
    if (gens.empty()) return {};
    const RingPtr& ring = gens.front().ring();
    if (blockVars < 0 || blockVars > ring->nvars())
        throw InputError("elimination block out of range");
    RingPtr elimRing =
        with_order(ring, TermOrder{OrderKind::Block, blockVars});
    std::vector<Poly> mapped;
    mapped.reserve(gens.size());
    for (const Poly& g : gens) {
        std::vector<Term> ts(g.terms().begin(), g.terms().end());
        mapped.push_back(Poly::from_terms(elimRing, std::move(ts)));
    }
    GroebnerBasis gb = buchberger(mapped, lim);
    std::vector<Poly> out;
    for (const Poly& g : gb.gens) {
        bool usesBlock = false;
        for (int i = 0; i < blockVars && !usesBlock; ++i)
            if (g.lead().m[i] > 0) usesBlock = true;
        if (usesBlock) continue;
        // elimination order: a block-free lead implies a block-free polynomial
        std::vector<Term> ts(g.terms().begin(), g.terms().end());
        out.push_back(Poly::from_terms(ring, std::move(ts)));
    }
    return out;
}

bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
    if (a.gens.size() != b.gens.size()) return false;
    for (size_t i = 0; i < a.gens.size(); ++i)
        if (a.gens[i] != b.gens[i]) return false;
    return true;
}

}  // namespace ringtrace
