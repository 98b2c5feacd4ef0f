#pragma once

#include <optional>
#include <vector>

#include "ringtrace/poly.hpp"

namespace ringtrace {

using IVec = std::vector<long long>;

// Integer lattice spanned by a list of vectors in Z^d, kept as an echelon
// basis (strictly increasing pivot rows) via unimodular column operations.
class Lattice {
  public:
    Lattice(int dim, const std::vector<IVec>& gens);

    int dim() const { return d_; }
    int rank() const { return int(basis_.size()); }
    bool contains(const IVec& v) const;

  private:
    void insert(std::vector<Int> v);

    int d_;
    std::vector<std::vector<Int>> basis_;
    std::vector<int> pivot_;
};

// Particular rational solution of A x = b (free variables set to zero),
// or nullopt when the system is inconsistent.
std::optional<std::vector<Rat>> solve_rational(std::vector<std::vector<Rat>> A,
                                               std::vector<Rat> b);

}  // namespace ringtrace
