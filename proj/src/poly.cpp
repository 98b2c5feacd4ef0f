#include "ringtrace/poly.hpp"

#include <algorithm>
#include <sstream>

#include "ringtrace/errors.hpp"

namespace ringtrace {

namespace {
void require_same_ring(const Poly& a, const Poly& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw InputError("polynomial operands live in different ambient rings");
}
}  // namespace

Poly Poly::constant(RingPtr ring, Rat c) {
    Poly p(std::move(ring));
    if (c != 0) p.t_.push_back({std::move(c), Expo(p.ring_->nvars(), 0)});
    return p;
}

Poly Poly::variable(const RingPtr& ring, int i) {
    if (i < 0 || i >= ring->nvars()) throw InputError("variable index out of range");
    Expo m(ring->nvars(), 0);
    m[i] = 1;
    return monomial(ring, Rat(1), std::move(m));
}

Poly Poly::monomial(RingPtr ring, Rat c, Expo m) {
    Poly p(std::move(ring));
    if (int(m.size()) != p.ring_->nvars())
        throw InputError("monomial length does not match ring");
    if (c != 0) p.t_.push_back({std::move(c), std::move(m)});
    return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
    Poly p(std::move(ring));
    const Ring& R = *p.ring_;
    for (const Term& t : terms)
        if (int(t.m.size()) != R.nvars())
            throw InputError("term length does not match ring");
    std::sort(terms.begin(), terms.end(),
              [&R](const Term& x, const Term& y) { return R.cmp(x.m, y.m) > 0; });
    for (Term& t : terms) {
        if (!p.t_.empty() && p.t_.back().m == t.m) {
            p.t_.back().c += t.c;
            if (p.t_.back().c == 0) p.t_.pop_back();
        } else if (t.c != 0) {
            p.t_.push_back(std::move(t));
        }
    }
    return p;
}

const Term& Poly::lead() const {
    if (t_.empty()) throw InternalError("lead() of zero polynomial");
    return t_[0];
}

int64_t Poly::degree() const {
    int64_t d = 0;
    for (const Term& t : t_) d = std::max(d, ring_->wdeg(t.m));
    return d;
}

bool Poly::is_homogeneous(int64_t* deg) const {
    if (t_.empty()) {
        if (deg) *deg = 0;
        return true;
    }
    int64_t d = ring_->wdeg(t_[0].m);
    for (const Term& t : t_)
        if (ring_->wdeg(t.m) != d) return false;
    if (deg) *deg = d;
    return true;
}

std::optional<std::vector<int64_t>> Poly::multidegree() const {
    if (!ring_->has_multigrading() || t_.empty()) return std::nullopt;
    auto md = ring_->multideg(t_[0].m);
    for (const Term& t : t_)
        if (ring_->multideg(t.m) != md) return std::nullopt;
    return md;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (Term& t : r.t_) t.c = -t.c;
    return r;
}

// Merge of two canonically sorted term lists.
static Poly merge(const Poly& a, const Poly& b, bool negate_b) {
    const Ring& R = *a.ring();
    Poly r(a.ring());
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() && j < tb.size()) {
        int c = R.cmp(ta[i].m, tb[j].m);
        if (c > 0) {
            out.push_back(ta[i++]);
        } else if (c < 0) {
            Term t = tb[j++];
            if (negate_b) t.c = -t.c;
            out.push_back(std::move(t));
        } else {
            Rat s = negate_b ? Rat(ta[i].c - tb[j].c) : Rat(ta[i].c + tb[j].c);
            if (s != 0) out.push_back({std::move(s), ta[i].m});
            ++i;
            ++j;
        }
    }
    for (; i < ta.size(); ++i) out.push_back(ta[i]);
    for (; j < tb.size(); ++j) {
        Term t = tb[j];
        if (negate_b) t.c = -t.c;
        out.push_back(std::move(t));
    }
    return Poly::from_terms_sorted(r.ring(), std::move(out));
}

// private fast path: caller guarantees canonical order, no dups, no zeros
Poly Poly::from_terms_sorted(RingPtr ring, std::vector<Term> terms) {
    Poly p(std::move(ring));
    p.t_ = std::move(terms);
    return p;
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_ring(a, b);
    return merge(a, b, false);
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_ring(a, b);
    return merge(a, b, true);
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_ring(a, b);
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const Term& ta : a.terms())
        for (const Term& tb : b.terms())
            out.push_back({Rat(ta.c * tb.c), expo_mul(ta.m, tb.m)});
    return Poly::from_terms(a.ring(), std::move(out));
}

Poly Poly::scaled(const Rat& c) const {
    if (c == 0) return Poly(ring_);
    Poly r(*this);
    for (Term& t : r.t_) t.c *= c;
    return r;
}

Poly Poly::times_term(const Rat& c, const Expo& m) const {
    if (c == 0) return Poly(ring_);
    Poly r(ring_);
    r.t_.reserve(t_.size());
    for (const Term& t : t_) r.t_.push_back({Rat(t.c * c), expo_mul(t.m, m)});
    return r;
}

Poly Poly::monic() const {
    if (t_.empty()) return *this;
    return scaled(Rat(1) / t_[0].c);
}

bool Poly::operator==(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
    return true;
}

Poly sub_scaled(const Poly& a, const Rat& c, const Expo& m, const Poly& b) {
    return a - b.times_term(c, m);
}

std::string monomial_str(const Ring& ring, const Expo& m) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << "*";
        os << ring.vars[i];
        if (m[i] != 1) os << "^" << m[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string term_str(const Ring& ring, const Rat& c, const Expo& m, bool leading) {
    std::ostringstream os;
    Rat a = c;
    if (leading) {
        if (a < 0) {
            os << "-";
            a = -a;
        }
    } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
    }
    if (expo_is_zero(m)) {
        os << a.get_str();
    } else {
        if (a != 1) os << a.get_str() << "*";
        os << monomial_str(ring, m);
    }
    return os.str();
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < t_.size(); ++i)
        s += term_str(*ring_, t_[i].c, t_[i].m, i == 0);
    return s;
}

}  // namespace ringtrace
