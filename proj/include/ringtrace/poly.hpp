#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "ringtrace/ring.hpp"

namespace ringtrace {

using Rat = mpq_class;
using Int = mpz_class;

struct Term {
    Rat c;   // nonzero in any stored polynomial
    Expo m;
};

// Multivariate polynomial with exact rational coefficients, kept in canonical
// form: terms strictly descending under the ambient ring's order, no zero
// coefficients, no duplicate monomials.
class Poly {
  public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, Rat c);
    static Poly variable(const RingPtr& ring, int i);
    static Poly monomial(RingPtr ring, Rat c, Expo m);
    // Sorts, merges duplicates, drops zeros.
    static Poly from_terms(RingPtr ring, std::vector<Term> terms);
    // Caller guarantees terms are already canonical (sorted, no dups, no zeros).
    static Poly from_terms_sorted(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    const Term& lead() const;
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && expo_is_zero(t_[0].m)); }

    // Max weighted degree over terms (0 for the zero polynomial).
    int64_t degree() const;
    bool is_homogeneous(int64_t* deg = nullptr) const;
    // Common multidegree of all terms, if one exists.
    std::optional<std::vector<int64_t>> multidegree() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rat& c) const;
    Poly times_term(const Rat& c, const Expo& m) const;
    Poly monic() const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string str() const;

  private:
    RingPtr ring_;
    std::vector<Term> t_;
};

// a - c * x^m * b, the reduction workhorse.
Poly sub_scaled(const Poly& a, const Rat& c, const Expo& m, const Poly& b);

std::string term_str(const Ring& ring, const Rat& c, const Expo& m, bool leading);
std::string monomial_str(const Ring& ring, const Expo& m);

}  // namespace ringtrace
