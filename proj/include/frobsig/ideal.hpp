#ifndef FROBSIG_IDEAL_HPP
#define FROBSIG_IDEAL_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "poly.hpp"

namespace frobsig {

// Ideal of a PolyRing with a lazily computed reduced Groebner basis.
// Immutable after construction; the basis is computed at most once under a
// single-writer discipline and then freely shared.
class Ideal {
   public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Poly> gens);

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
    static Ideal unit(RingPtr ring) {
        std::vector<Poly> g{Poly::constant(ring, 1)};
        return Ideal(std::move(ring), std::move(g));
    }

    const RingPtr& ring() const { return state_->ring; }
    const std::vector<Poly>& gens() const { return state_->gens; }

    // Reduced Groebner basis under the ring's order (monic, tail-reduced).
    const std::vector<Poly>& groebner() const;

    bool is_zero() const { return groebner().empty(); }
    bool is_unit() const;
    bool contains(const Poly& f) const;
    bool contains(const Ideal& other) const;
    bool equals(const Ideal& other) const;

    std::vector<std::string> gens_str() const;

   private:
    struct State {
        RingPtr ring;
        std::vector<Poly> gens;
        mutable std::mutex mu;
        mutable bool basis_done = false;
        mutable std::vector<Poly> basis;
    };
    std::shared_ptr<State> state_;
};

// Remainder of f on division by the reduced basis of I; zero iff f in I.
Poly normal_form(const Poly& f, const Ideal& I);

// Remainder on division by an explicit polynomial list (need not be a GB).
Poly reduce_by(const Poly& f, const std::vector<Poly>& gens);

// Reduced Groebner basis of an explicit generator list.
std::vector<Poly> groebner_basis(const RingPtr& ring, std::vector<Poly> gens);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal colon(const Ideal& I, const Ideal& J);  // (I : J)
Ideal colon_poly(const Ideal& I, const Poly& f);

// Ideal generated by g^q over generators g; valid over polynomial rings by
// flatness of Frobenius. q must be a power of the characteristic.
Ideal bracket_power(const Ideal& I, std::uint64_t q);

// x_i^q for all variables.
Ideal variable_power_ideal(const RingPtr& ring, std::uint64_t q);

// Smallest ideal K with f in K^[q] (q a power of char): generated by the
// Frobenius components of f. For an ideal, the sum over its generators.
Ideal frobenius_root(const Poly& f, std::uint64_t q);
Ideal frobenius_root(const Ideal& I, std::uint64_t q);

int krull_dim_of(const Ideal& I);  // dim of ring/I

// Number of standard monomials of LT(I), or nullopt when infinite.
std::optional<std::uint64_t> colength(const Ideal& I);

// All standard monomials (requires finiteness).
std::vector<Monomial> standard_monomials(const Ideal& I);

// Exact division g / f; nullopt if f does not divide g.
std::optional<Poly> exact_divide(const Poly& g, const Poly& f);

// Rebuild f in `target`, sending source variable i to target variable
// var_map[i]. Every exponent outside the map must be zero.
Poly map_poly(const Poly& f, const RingPtr& target, const std::vector<int>& var_map);

// Generators of I whose support lies in variables [split, nvars); the ring
// must carry a block order with that split. Result lives in `target` via
// var_map (source var i -> target var var_map[i], -1 for eliminated vars).
std::vector<Poly> eliminate_block(const Ideal& I, size_t split, const RingPtr& target,
                                  const std::vector<int>& var_map);

}  // namespace frobsig

#endif
