#include "ringtrace/lattice.hpp"

#include <algorithm>

#include "ringtrace/errors.hpp"

namespace ringtrace {

Lattice::Lattice(int dim, const std::vector<IVec>& gens) : d_(dim) {
    for (const IVec& g : gens) {
        if (int(g.size()) != dim) throw InputError("lattice generator length mismatch");
        std::vector<Int> v(dim);
        for (int i = 0; i < dim; ++i) v[i] = Int(long(g[i]));
        insert(std::move(v));
    }
}

void Lattice::insert(std::vector<Int> v) {
    for (size_t k = 0; k < basis_.size(); ++k) {
        int p = pivot_[k];
        bool lead = true;
        for (int i = 0; i < p; ++i)
            if (v[i] != 0) { lead = false; break; }
        if (!lead) {
            // v has an earlier pivot than basis_[k]; insert it here
            int np = 0;
            while (v[np] == 0) ++np;
            basis_.insert(basis_.begin() + k, std::move(v));
            pivot_.insert(pivot_.begin() + k, np);
            return;
        }
        if (v[p] == 0) continue;
        // combine so the basis vector keeps pivot p with the gcd
        Int g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
                   basis_[k][p].get_mpz_t(), v[p].get_mpz_t());
        Int bp = basis_[k][p] / g, vp = v[p] / g;
        std::vector<Int> nb(d_), nv(d_);
        for (int i = 0; i < d_; ++i) {
            nb[i] = x * basis_[k][i] + y * v[i];
            nv[i] = bp * v[i] - vp * basis_[k][i];
        }
        basis_[k] = std::move(nb);
        v = std::move(nv);
    }
    int np = 0;
    while (np < d_ && v[np] == 0) ++np;
    if (np == d_) return;  // dependent
    basis_.push_back(std::move(v));
    pivot_.push_back(np);
}

bool Lattice::contains(const IVec& v) const {
    if (int(v.size()) != d_) throw InputError("lattice vector length mismatch");
    std::vector<Int> w(d_);
    for (int i = 0; i < d_; ++i) w[i] = Int(long(v[i]));
    for (size_t k = 0; k < basis_.size(); ++k) {
        int p = pivot_[k];
        for (int i = 0; i < p; ++i)
            if (w[i] != 0) return false;
        if (w[p] == 0) continue;
        if (w[p] % basis_[k][p] != 0) return false;
        Int q = w[p] / basis_[k][p];
        for (int i = 0; i < d_; ++i) w[i] -= q * basis_[k][i];
    }
    for (int i = 0; i < d_; ++i)
        if (w[i] != 0) return false;
    return true;
}

std::optional<std::vector<Rat>> solve_rational(std::vector<std::vector<Rat>> A,
                                               std::vector<Rat> b) {
    const int rows = int(A.size());
    const int cols = rows ? int(A[0].size()) : 0;
    std::vector<int> pivotCol;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (A[i][c] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(A[sel], A[r]);
        std::swap(b[sel], b[r]);
        Rat inv = 1 / A[r][c];
        for (int j = c; j < cols; ++j) A[r][j] *= inv;
        b[r] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rat f = A[i][c];
            for (int j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
            b[i] -= f * b[r];
        }
        pivotCol.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (int k = 0; k < r; ++k) x[pivotCol[k]] = b[k];
    return x;
}

}  // namespace ringtrace
