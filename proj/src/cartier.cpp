#include "frobsig/cartier.hpp"

namespace frobsig {

std::uint64_t p_power(fp_t p, int e) {
    std::uint64_t q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > (1ull << 40)) throw Error("p^e overflow");
    }
    return q;
}

namespace {

Poly signed_multiplier(const std::vector<DivisorTerm>& terms, std::uint64_t q, bool negative) {
    Poly r;
    bool started = false;
    for (const auto& t : terms) {
        if (t.t.is_negative() != negative) continue;
        std::int64_t k = t.t.abs().ceil_mul(static_cast<std::int64_t>(q - 1));
        if (k <= 0) continue;
        Poly piece = t.g.pow(static_cast<std::uint64_t>(k));
        r = started ? r * piece : piece;
        started = true;
    }
    if (!started) {
        if (terms.empty()) throw Error("multiplier of an empty divisor needs a ring");
        return Poly::constant(terms.front().g.ring(), 1);
    }
    return r;
}

}  // namespace

Poly DivisorQ::positive_multiplier(std::uint64_t q) const {
    return signed_multiplier(terms_, q, false);
}

Poly DivisorQ::negative_multiplier(std::uint64_t q) const {
    return signed_multiplier(terms_, q, true);
}

Ideal fedder_full_ideal(const QuotientPresentation& P, std::uint64_t q) {
    if (P.is_regular()) return Ideal::unit(P.ambient());  // (0 : 0) = (1)
    return colon(bracket_power(P.relations(), q), P.relations());
}

FedderData fedder_data(const CartierSpec& spec, const QuotientPresentation& P, int e) {
    if (e < 1) throw Error("fedder_data: e must be >= 1");
    const std::uint64_t q = p_power(P.p(), e);
    FedderData out;
    out.e = e;
    out.q = q;

    const Ideal& I = P.relations();
    Ideal Iq = P.is_regular() ? Ideal::zero(P.ambient()) : bracket_power(I, q);

    switch (spec.kind) {
        case CartierSpec::Kind::Full: {
            out.U = fedder_full_ideal(P, q);
            return out;
        }
        case CartierSpec::Kind::Pair: {
            Ideal full = fedder_full_ideal(P, q);
            // numerator: product of positive divisor powers and the a^t part
            Poly num = spec.divisor.empty() ? Poly::constant(P.ambient(), 1)
                                            : spec.divisor.positive_multiplier(q);
            Ideal num_ideal(P.ambient(), {num});
            if (spec.ideal_part) {
                const auto& [a, t] = *spec.ideal_part;
                std::int64_t k = t.ceil_mul(static_cast<std::int64_t>(q - 1));
                Ideal apow = Ideal::unit(P.ambient());
                for (std::int64_t i = 0; i < k; ++i) apow = ideal_product(apow, a);
                num_ideal = ideal_product(num_ideal, apow);
            }
            if (spec.divisor.has_negative_part()) {
                Poly den = spec.divisor.negative_multiplier(q);
                // effectiveness probe: the positive part must clear the
                // denominator modulo the relations
                Poly probe = num;
                if (!ideal_sum(Ideal(P.ambient(), {den}), I).contains(probe)) {
                    out.empty = true;
                    out.U = Ideal::zero(P.ambient());
                    return out;
                }
                // W = ((num) + I : den), then U = full*W + I^[q]
                Ideal W = colon_poly(ideal_sum(num_ideal, I), den);
                out.U = ideal_sum(ideal_product(full, W), Iq);
            } else {
                out.U = ideal_sum(ideal_product(full, num_ideal), Iq);
            }
            return out;
        }
        case CartierSpec::Kind::Principal: {
            if (e % spec.e0 != 0) throw Error("principal spec: e must be a multiple of e0");
            const std::uint64_t q0 = p_power(P.p(), spec.e0);
            // u_e = u0^((q-1)/(q0-1)) from iterating u_{e+e'} = u_e^{p^e'} u_{e'}
            std::uint64_t exp = (q - 1) / (q0 - 1);
            out.U = ideal_sum(Ideal(P.ambient(), {spec.u0.pow(exp)}), Iq);
            return out;
        }
    }
    throw Error("unreachable");
}

bool fedder_fpure(const QuotientPresentation& P) {
    const fp_t p = P.p();
    Ideal U1 = fedder_full_ideal(P, p);
    Ideal mp = variable_power_ideal(P.ambient(), p);
    for (const auto& g : U1.groebner())
        if (!normal_form(g, mp).is_zero()) return true;
    return false;
}

Poly phi_apply(const Poly& f, fp_t p, int e) {
    if (e < 1) throw Error("phi_apply: e must be >= 1");
    return f.phi_apply(p_power(p, e));
}

}  // namespace frobsig
