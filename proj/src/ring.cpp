#include "ringtrace/ring.hpp"

#include <algorithm>

#include "ringtrace/errors.hpp"

namespace ringtrace {

namespace {

// Reverse lexicographic tie-break on [lo, hi): the later variable with the
// smaller exponent wins. Returns <0 / 0 / >0 for a < b / a == b / a > b.
int revlex_range(const Expo& a, const Expo& b, int lo, int hi) {
    for (int i = hi - 1; i >= lo; --i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

int lex_range(const Expo& a, const Expo& b, int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

int cmp64(int64_t x, int64_t y) { return x < y ? -1 : (x > y ? 1 : 0); }

}  // namespace

std::vector<int64_t> Ring::multideg(const Expo& e) const {
    std::vector<int64_t> md(multigrading.size(), 0);
    for (size_t r = 0; r < multigrading.size(); ++r) {
        int64_t s = 0;
        for (size_t j = 0; j < e.size(); ++j) s += multigrading[r][j] * int64_t(e[j]);
        md[r] = s;
    }
    return md;
}

int Ring::cmp(const Expo& a, const Expo& b) const {
    const int n = nvars();
    switch (order.kind) {
        case OrderKind::DegRevLex: {
            if (int c = cmp64(wdeg(a), wdeg(b))) return c;
            return revlex_range(a, b, 0, n);
        }
        case OrderKind::Lex:
            return lex_range(a, b, 0, n);
        case OrderKind::Block: {
            const int blk = order.elimBlock;
            int64_t da = 0, db = 0;
            for (int i = 0; i < blk; ++i) { da += a[i]; db += b[i]; }
            if (int c = cmp64(da, db)) return c;
            if (int c = revlex_range(a, b, 0, blk)) return c;
            da = db = 0;
            for (int i = blk; i < n; ++i) {
                da += weights[i] * int64_t(a[i]);
                db += weights[i] * int64_t(b[i]);
            }
            if (int c = cmp64(da, db)) return c;
            return revlex_range(a, b, blk, n);
        }
    }
    throw InternalError("unknown term order kind");
}

RingPtr make_ring(std::vector<std::string> vars, TermOrder order,
                  std::vector<int64_t> weights,
                  std::vector<std::vector<int64_t>> multigrading) {
    if (vars.empty()) throw InputError("ring needs at least one variable");
    {
        auto sorted = vars;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("duplicate variable name");
    }
    if (weights.empty()) weights.assign(vars.size(), 1);
    if (weights.size() != vars.size())
        throw InputError("weight vector length does not match variable count");
    for (int64_t w : weights)
        if (w < 1) throw InputError("grading weights must be >= 1");
    if (order.kind == OrderKind::Block &&
        (order.elimBlock < 0 || order.elimBlock > int(vars.size())))
        throw InputError("elimination block out of range");
    for (const auto& row : multigrading)
        if (row.size() != vars.size())
            throw InputError("multigrading row length does not match variable count");
    auto r = std::make_shared<Ring>();
    r->vars = std::move(vars);
    r->order = order;
    r->weights = std::move(weights);
    r->multigrading = std::move(multigrading);
    return r;
}

bool same_ring(const Ring& a, const Ring& b) {
    return a.vars == b.vars && a.order.kind == b.order.kind &&
           a.order.elimBlock == b.order.elimBlock && a.weights == b.weights &&
           a.multigrading == b.multigrading;
}

RingPtr with_order(const RingPtr& r, TermOrder order) {
    return make_ring(r->vars, order, r->weights, r->multigrading);
}

int variable_index(const Ring& r, const std::string& name) {
    for (int i = 0; i < r.nvars(); ++i)
        if (r.vars[i] == name) return i;
    return -1;
}

}  // namespace ringtrace
