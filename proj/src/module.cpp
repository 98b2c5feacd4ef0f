#include "ringtrace/module.hpp"

#include <algorithm>

#include "ringtrace/errors.hpp"

namespace ringtrace {

FreeModulePtr make_free_module(RingPtr ring, std::vector<int64_t> shifts,
                               std::vector<std::vector<int64_t>> mshifts) {
    if (!mshifts.empty() && mshifts.size() != shifts.size())
        throw InternalError("mshifts length does not match rank");
    auto fm = std::make_shared<FreeModule>();
    fm->ring = std::move(ring);
    fm->shifts = std::move(shifts);
    fm->mshifts = std::move(mshifts);
    return fm;
}

bool same_module(const FreeModulePtr& a, const FreeModulePtr& b) {
    if (a == b) return true;
    return same_ring(a->ring, b->ring) && a->shifts == b->shifts &&
           a->mshifts == b->mshifts;
}

int cmp_mterm(const FreeModule& fm, const Expo& ma, int ca, const Expo& mb, int cb) {
    int64_t da = fm.ring->wdeg(ma) + fm.shifts[ca];
    int64_t db = fm.ring->wdeg(mb) + fm.shifts[cb];
    if (da != db) return da < db ? -1 : 1;
    if (ca != cb) return ca < cb ? 1 : -1;  // lower component is greater
    return fm.ring->cmp(ma, mb);
}

Vec Vec::unit(const FreeModulePtr& fm, int comp) {
    return poly_times_unit(fm, Poly::constant(fm->ring, Rat(1)), comp);
}

Vec Vec::poly_times_unit(const FreeModulePtr& fm, const Poly& p, int comp) {
    if (comp < 0 || comp >= fm->rank()) throw InternalError("component out of range");
    if (!same_ring(fm->ring, p.ring()))
        throw InputError("polynomial ring does not match module ring");
    Vec v(fm);
    v.t_.reserve(p.size());
    for (const Term& t : p.terms()) v.t_.push_back({t.c, t.m, comp});
    // a polynomial's canonical order is already the module order within one component
    return v;
}

Vec Vec::from_terms(FreeModulePtr fm, std::vector<MTerm> terms) {
    Vec v(std::move(fm));
    const FreeModule& M = *v.fm_;
    for (const MTerm& t : terms) {
        if (t.comp < 0 || t.comp >= M.rank()) throw InternalError("component out of range");
        if (int(t.m.size()) != M.ring->nvars())
            throw InternalError("term length does not match ring");
    }
    std::sort(terms.begin(), terms.end(), [&M](const MTerm& x, const MTerm& y) {
        return cmp_mterm(M, x.m, x.comp, y.m, y.comp) > 0;
    });
    for (MTerm& t : terms) {
        if (!v.t_.empty() && v.t_.back().comp == t.comp && v.t_.back().m == t.m) {
            v.t_.back().c += t.c;
            if (v.t_.back().c == 0) v.t_.pop_back();
        } else if (t.c != 0) {
            v.t_.push_back(std::move(t));
        }
    }
    return v;
}

Vec Vec::from_components(const FreeModulePtr& fm, const std::vector<Poly>& comps) {
    if (int(comps.size()) != fm->rank())
        throw InternalError("component count does not match rank");
    std::vector<MTerm> terms;
    for (int c = 0; c < int(comps.size()); ++c)
        for (const Term& t : comps[c].terms()) terms.push_back({t.c, t.m, c});
    return from_terms(fm, std::move(terms));
}

const MTerm& Vec::lead() const {
    if (t_.empty()) throw InternalError("lead() of zero module element");
    return t_[0];
}

Poly Vec::component(int comp) const {
    std::vector<Term> out;
    for (const MTerm& t : t_)
        if (t.comp == comp) out.push_back({t.c, t.m});
    return Poly::from_terms(fm_->ring, std::move(out));
}

std::vector<Poly> Vec::components() const {
    std::vector<std::vector<Term>> buckets(fm_->rank());
    for (const MTerm& t : t_) buckets[t.comp].push_back({t.c, t.m});
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(Poly::from_terms(fm_->ring, std::move(b)));
    return out;
}

int64_t Vec::degree() const {
    int64_t d = 0;
    bool first = true;
    for (const MTerm& t : t_) {
        int64_t td = fm_->ring->wdeg(t.m) + fm_->shifts[t.comp];
        if (first || td > d) d = td;
        first = false;
    }
    return d;
}

bool Vec::is_homogeneous(int64_t* deg) const {
    if (t_.empty()) {
        if (deg) *deg = 0;
        return true;
    }
    int64_t d = fm_->ring->wdeg(t_[0].m) + fm_->shifts[t_[0].comp];
    for (const MTerm& t : t_)
        if (fm_->ring->wdeg(t.m) + fm_->shifts[t.comp] != d) return false;
    if (deg) *deg = d;
    return true;
}

std::optional<std::vector<int64_t>> Vec::multidegree() const {
    if (!fm_->has_mshifts() || t_.empty()) return std::nullopt;
    const Ring& R = *fm_->ring;
    auto mdeg_of = [&](const MTerm& t) {
        auto md = R.multideg(t.m);
        const auto& sh = fm_->mshifts[t.comp];
        for (size_t i = 0; i < md.size(); ++i) md[i] += sh[i];
        return md;
    };
    auto md = mdeg_of(t_[0]);
    for (const MTerm& t : t_)
        if (mdeg_of(t) != md) return std::nullopt;
    return md;
}

Vec Vec::operator-() const {
    Vec r(*this);
    for (MTerm& t : r.t_) t.c = -t.c;
    return r;
}

static Vec vmerge(const Vec& a, const Vec& b, bool negate_b) {
    if (!same_module(a.module(), b.module()))
        throw InputError("module element operands live in different free modules");
    const FreeModule& M = *a.module();
    std::vector<MTerm> out;
    out.reserve(a.terms().size() + b.terms().size());
    size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() && j < tb.size()) {
        int c = cmp_mterm(M, ta[i].m, ta[i].comp, tb[j].m, tb[j].comp);
        if (c > 0) {
            out.push_back(ta[i++]);
        } else if (c < 0) {
            MTerm t = tb[j++];
            if (negate_b) t.c = -t.c;
            out.push_back(std::move(t));
        } else {
            Rat s = negate_b ? Rat(ta[i].c - tb[j].c) : Rat(ta[i].c + tb[j].c);
            if (s != 0) out.push_back({std::move(s), ta[i].m, ta[i].comp});
            ++i;
            ++j;
        }
    }
    for (; i < ta.size(); ++i) out.push_back(ta[i]);
    for (; j < tb.size(); ++j) {
        MTerm t = tb[j];
        if (negate_b) t.c = -t.c;
        out.push_back(std::move(t));
    }
    Vec r(a.module());
    r.assign_sorted(std::move(out));
    return r;
}

void Vec::assign_sorted(std::vector<MTerm> terms) { t_ = std::move(terms); }

Vec operator+(const Vec& a, const Vec& b) { return vmerge(a, b, false); }
Vec operator-(const Vec& a, const Vec& b) { return vmerge(a, b, true); }

Vec Vec::times_term(const Rat& c, const Expo& m) const {
    if (c == 0) return Vec(fm_);
    Vec r(fm_);
    r.t_.reserve(t_.size());
    for (const MTerm& t : t_) r.t_.push_back({Rat(t.c * c), expo_mul(t.m, m), t.comp});
    return r;
}

Vec Vec::scaled(const Rat& c) const {
    if (c == 0) return Vec(fm_);
    Vec r(*this);
    for (MTerm& t : r.t_) t.c *= c;
    return r;
}

Vec Vec::monic() const {
    if (t_.empty()) return *this;
    return scaled(Rat(1) / t_[0].c);
}

bool Vec::operator==(const Vec& o) const {
    if (!same_module(fm_, o.fm_)) return false;
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (t_[i].comp != o.t_[i].comp || t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c)
            return false;
    return true;
}

std::string Vec::str() const {
    std::string s = "(";
    auto comps = components();
    for (size_t i = 0; i < comps.size(); ++i) {
        if (i) s += ", ";
        s += comps[i].str();
    }
    return s + ")";
}

Vec sub_scaled(const Vec& a, const Rat& c, const Expo& m, const Vec& b) {
    return a - b.times_term(c, m);
}

Vec poly_times_vec(const Poly& q, const Vec& v) {
    std::vector<MTerm> out;
    out.reserve(q.size() * v.terms().size());
    for (const Term& t : q.terms())
        for (const MTerm& u : v.terms())
            out.push_back({Rat(t.c * u.c), expo_mul(t.m, u.m), u.comp});
    return Vec::from_terms(v.module(), std::move(out));
}

}  // namespace ringtrace
