#ifndef FROBSIG_SPLITTING_HPP
#define FROBSIG_SPLITTING_HPP

#include <string>
#include <vector>

#include "cartier.hpp"
#include "matrix.hpp"

namespace frobsig {

// Pairing between U_e/(m^[q] U_e + I^[q]) and S/(m^[q] + I): the entry at
// (u, s) is the residue of Phi^e(u\,s), i.e. one coefficient of a generator
// of U_e. Rank = a_e; the right kernel lifts to the nonsplit ideal I_e.
struct Pairing {
    std::vector<Monomial> columns;  // standard monomials of m^[q] + I
    RowEchelon echelon;
    std::uint64_t q = 0;

    long long rank() const { return static_cast<long long>(echelon.rank()); }
};

Pairing build_pairing(const QuotientPresentation& P, const Ideal& U, std::uint64_t q);

long long splitting_number(const QuotientPresentation& P, const CartierSpec& spec, int e);

struct NonsplitResult {
    Ideal ideal;  // ambient ideal containing I and m^[q]
    long long a_e = 0;
    bool cyclic = false;            // C_e cyclic over F^e_* R
    bool colength_checked = false;  // a_e-consistency ran
    bool colength_consistent = true;
};

NonsplitResult nonsplit_ideal(const QuotientPresentation& P, const CartierSpec& spec, int e);

struct StabilizedIdeal {
    Ideal ideal;
    bool stabilized = false;
    bool not_f_pure = false;
    bool compat_certified = false;
    int e_lo = 0, e_hi = 0;
    std::vector<std::string> notes;
};

// Intersection of the nonsplit ideals over e in multiples of the first e
// with a_e != 0; candidates are compared with their m^[q]-scale tails
// stripped (generators of degree >= q_last).
StabilizedIdeal splitting_prime(const QuotientPresentation& P, const CartierSpec& spec, int e_max);

struct SplittingRow {
    int e = 0;
    std::uint64_t q = 0;
    long long a_e = 0;
    Rat ratio;  // a_e / q^delta
    bool defined = true;
};

struct SplittingReport {
    std::vector<SplittingRow> rows;
    int n = 0;      // gcd of e with a_e != 0 over the window
    int delta = 0;  // Krull dimension
    Rat estimate;   // Richardson extrapolant under a_e/q^d = s + O(1/q)
    Rat error_bar;
    bool stabilized = false;
    std::vector<std::string> notes;
};

SplittingReport fsignature_estimate(const QuotientPresentation& P, const CartierSpec& spec,
                                    int e_max);

// r(R,C) = s(R/sp, induced algebra); Fedder data pushed forward mod sp.
SplittingReport splitting_ratio(const QuotientPresentation& P, const CartierSpec& spec, int e_max);

// Internal: a_e for an explicit Fedder ideal (used by ratio and verifiers).
long long splitting_number_with(const QuotientPresentation& P, const Ideal& U, std::uint64_t q);

SplittingReport fsignature_with(const QuotientPresentation& P,
                                const std::vector<std::pair<int, Ideal>>& fedder_by_e, int delta);

}  // namespace frobsig

#endif
