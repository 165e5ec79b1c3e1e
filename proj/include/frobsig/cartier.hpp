#ifndef FROBSIG_CARTIER_HPP
#define FROBSIG_CARTIER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "quotient.hpp"
#include "rational.hpp"

namespace frobsig {

// Formal Q-divisor: list of (g, t) with g a nonzero non-unit polynomial and
// t an exact rational. Negative coefficients arise as f*Delta - Ram_T.
// Polynomials are never factored; all comparisons downstream reduce to
// ideal membership of (q-1)-scaled data.
struct DivisorTerm {
    Poly g;
    Rat t;
};

class DivisorQ {
   public:
    DivisorQ() = default;
    explicit DivisorQ(std::vector<DivisorTerm> terms) {
        for (auto& t : terms) add(std::move(t.g), t.t);
    }

    void add(Poly g, Rat t) {
        if (t.is_zero()) return;  // terms with t = 0 are dropped
        if (g.is_zero()) throw Error("divisor of the zero polynomial");
        if (g.is_constant()) return;  // unit: trivial divisor
        terms_.push_back({g.monic(), t});
    }

    const std::vector<DivisorTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    bool has_negative_part() const {
        for (const auto& t : terms_)
            if (t.t.is_negative()) return true;
        return false;
    }

    DivisorQ scaled(const Rat& c) const {
        DivisorQ r;
        for (const auto& t : terms_) r.add(t.g, t.t * c);
        return r;
    }

    // Product of g^ceil(t*(q-1)) over terms with positive t.
    Poly positive_multiplier(std::uint64_t q) const;
    // Product of g^ceil(|t|*(q-1)) over terms with negative t.
    Poly negative_multiplier(std::uint64_t q) const;

   private:
    std::vector<DivisorTerm> terms_;
};

// Description of a Cartier algebra, realized per-e as a Fedder ideal.
struct CartierSpec {
    enum class Kind { Full, Pair, Principal };

    Kind kind = Kind::Full;

    // Pair
    DivisorQ divisor;
    std::optional<std::pair<Ideal, Rat>> ideal_part;

    // Principal
    Poly u0;
    int e0 = 1;

    static CartierSpec full() { return {}; }
    static CartierSpec pair(DivisorQ d, std::optional<std::pair<Ideal, Rat>> a = std::nullopt) {
        CartierSpec s;
        s.kind = Kind::Pair;
        s.divisor = std::move(d);
        s.ideal_part = std::move(a);
        return s;
    }
    static CartierSpec principal(Poly u0, int e0) {
        if (u0.is_zero()) throw Error("principal Cartier spec with zero map");
        CartierSpec s;
        s.kind = Kind::Principal;
        s.u0 = std::move(u0);
        s.e0 = e0;
        return s;
    }
};

// Per-e Fedder presentation: C_e corresponds to U_e / I^[q].
struct FedderData {
    int e = 0;
    std::uint64_t q = 0;
    Ideal U;           // ideal of the ambient ring, U >= I^[q]
    bool empty = false;  // non-effective pair in this degree
};

// A single p^{-e}-linear map phi = Phi^e . u on R = S/I, u in (I^[q]:I).
struct PMinusLinearMap {
    int e = 1;
    Poly u;
};

std::uint64_t p_power(fp_t p, int e);

// Fedder ideal of the full Cartier algebra: (I^[q] : I); unit ideal for I=0.
Ideal fedder_full_ideal(const QuotientPresentation& P, std::uint64_t q);

FedderData fedder_data(const CartierSpec& spec, const QuotientPresentation& P, int e);

// Fedder's criterion: F-pure iff (I^[p] : I) is not inside m^[p].
bool fedder_fpure(const QuotientPresentation& P);

// Phi^e applied to f (ambient-level Cartier operator).
Poly phi_apply(const Poly& f, fp_t p, int e);

}  // namespace frobsig

#endif
