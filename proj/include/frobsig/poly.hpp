#ifndef FROBSIG_POLY_HPP
#define FROBSIG_POLY_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace frobsig {

struct Term {
    Monomial mono;
    fp_t coeff;  // nonzero
};

// Sparse multivariate polynomial. Terms kept sorted descending in the ring's
// order; no zero coefficients are stored.
class Poly {
   public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, std::int64_t c);
    static Poly variable(RingPtr ring, size_t index, exp_t e = 1);
    static Poly monomial(RingPtr ring, Monomial m, fp_t c = 1);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    bool is_constant() const { return terms_.empty() || total_degree(terms_[0].mono) == 0; }
    bool is_unit_constant() const { return terms_.size() == 1 && total_degree(terms_[0].mono) == 0; }
    bool is_monomial() const { return terms_.size() == 1; }

    const Term& leading_term() const {
        if (terms_.empty()) throw Error("leading term of zero polynomial");
        return terms_[0];
    }
    const Monomial& leading_monomial() const { return leading_term().mono; }
    fp_t leading_coeff() const { return leading_term().coeff; }

    std::uint64_t degree() const {  // total degree, 0 for the zero polynomial
        std::uint64_t d = 0;
        for (const auto& t : terms_) d = std::max(d, total_degree(t.mono));
        return d;
    }

    fp_t coeff_of(const Monomial& m) const;
    fp_t constant_term() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly scaled(fp_t c) const;                       // c * this
    Poly times_monomial(const Monomial& m, fp_t c) const;  // c * x^m * this
    Poly pow(std::uint64_t e) const;

    // Coefficient-wise q-th power (q = p^e), the Frobenius image.
    Poly frobenius(std::uint64_t q) const;

    // Monic under the ring order (leading coefficient 1); zero stays zero.
    Poly monic() const;

    // Substitute images[i] for variable i; images live in `target`.
    Poly substitute(const RingPtr& target, const std::vector<Poly>& images) const;

    // The dual-basis trace of (x_1...x_n)^(q-1): keeps terms with all
    // exponents == q-1 mod q and divides the shifted exponents by q.
    // Coefficients are fixed since Frobenius is the identity on F_p.
    Poly phi_apply(std::uint64_t q) const;

    // Decomposition f = sum_a (g_a)^q * x^a over 0 <= a < q componentwise.
    // Returns the nonzero components g_a keyed by a.
    std::vector<std::pair<Monomial, Poly>> frobenius_components(std::uint64_t q) const;

    std::string str() const;

    // Builds the term list from unsorted/unreduced input.
    static Poly from_terms(RingPtr ring, std::vector<Term> raw);

   private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

inline Poly operator*(std::int64_t c, const Poly& f) {
    return f.scaled(f.ring() ? f.ring()->field().reduce(c) : 0);
}

std::ostream& operator<<(std::ostream& os, const Poly& f);

// Fast repeated coefficient lookup against a fixed polynomial.
class CoeffTable {
   public:
    explicit CoeffTable(const Poly& f) {
        for (const auto& t : f.terms()) map_.emplace(t.mono, t.coeff);
    }
    fp_t at(const Monomial& m) const {
        auto it = map_.find(m);
        return it == map_.end() ? 0 : it->second;
    }

   private:
    std::unordered_map<Monomial, fp_t, MonomialHash> map_;
};

}  // namespace frobsig

#endif
