#pragma once

#include <memory>
#include <optional>

#include "ringtrace/poly.hpp"

namespace ringtrace {

// Graded free module over an ambient ring. shifts[i] is the Z-degree of basis
// element e_i; mshifts (when present) carries multidegrees.
struct FreeModule {
    RingPtr ring;
    std::vector<int64_t> shifts;
    std::vector<std::vector<int64_t>> mshifts;  // empty, or one per basis element

    int rank() const { return int(shifts.size()); }
    bool has_mshifts() const { return !mshifts.empty(); }
};

using FreeModulePtr = std::shared_ptr<const FreeModule>;

FreeModulePtr make_free_module(RingPtr ring, std::vector<int64_t> shifts,
                               std::vector<std::vector<int64_t>> mshifts = {});

struct MTerm {
    Rat c;
    Expo m;
    int32_t comp;
};

// Module monomial order: shifted degree first, then position over term
// (lower component index is greater), then the ring order.
int cmp_mterm(const FreeModule& fm, const Expo& ma, int ca, const Expo& mb, int cb);

// Element of a graded free module, canonical form as in Poly.
class Vec {
  public:
    Vec() = default;
    explicit Vec(FreeModulePtr fm) : fm_(std::move(fm)) {}

    static Vec zero(FreeModulePtr fm) { return Vec(std::move(fm)); }
    static Vec unit(const FreeModulePtr& fm, int comp);
    static Vec poly_times_unit(const FreeModulePtr& fm, const Poly& p, int comp);
    static Vec from_terms(FreeModulePtr fm, std::vector<MTerm> terms);
    static Vec from_components(const FreeModulePtr& fm, const std::vector<Poly>& comps);

    const FreeModulePtr& module() const { return fm_; }
    const RingPtr& ring() const { return fm_->ring; }
    const std::vector<MTerm>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    const MTerm& lead() const;

    Poly component(int comp) const;
    std::vector<Poly> components() const;  // length = rank

    int64_t degree() const;  // max shifted degree over terms
    bool is_homogeneous(int64_t* deg = nullptr) const;
    std::optional<std::vector<int64_t>> multidegree() const;

    Vec operator-() const;
    friend Vec operator+(const Vec& a, const Vec& b);
    friend Vec operator-(const Vec& a, const Vec& b);
    Vec times_term(const Rat& c, const Expo& m) const;
    Vec scaled(const Rat& c) const;
    Vec monic() const;

    bool operator==(const Vec& o) const;
    bool operator!=(const Vec& o) const { return !(*this == o); }

    std::string str() const;

    // Internal: adopt an already-canonical term list.
    void assign_sorted(std::vector<MTerm> terms);

  private:
    FreeModulePtr fm_;
    std::vector<MTerm> t_;
};

// a - c * x^m * b
Vec sub_scaled(const Vec& a, const Rat& c, const Expo& m, const Vec& b);

Vec poly_times_vec(const Poly& q, const Vec& v);

bool same_module(const FreeModulePtr& a, const FreeModulePtr& b);

}  // namespace ringtrace
