#include "frobsig/splitting.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace frobsig {

namespace {

constexpr size_t kMaxColumns = 200000;

std::vector<Monomial> pairing_columns(const QuotientPresentation& P, std::uint64_t q) {
    Ideal trunc = ideal_sum(variable_power_ideal(P.ambient(), q), P.relations());
    auto cols = standard_monomials(trunc);
    if (cols.size() > kMaxColumns) throw Error("pairing truncation too large");
    return cols;
}

}  // namespace

Pairing build_pairing(const QuotientPresentation& P, const Ideal& U, std::uint64_t q) {
    const RingPtr& ring = P.ambient();
    const size_t n = ring->nvars();
    Pairing pr{pairing_columns(P, q), RowEchelon(ring->field(), 0), q};
    const size_t ncols = pr.columns.size();
    pr.echelon = RowEchelon(ring->field(), ncols);

    Monomial K(n, static_cast<exp_t>(q - 1));

    // Sparse assembly keyed by the row monomial beta: for each generator g,
    // each support monomial mu and column gamma, the row beta = K - mu - gamma
    // receives coeff_g(mu) at column gamma.
    for (const auto& g : U.gens()) {
        std::map<Monomial, std::vector<std::pair<size_t, fp_t>>> rows;
        for (const auto& term : g.terms()) {
            const Monomial& mu = term.mono;
            bool fits = true;
            for (size_t i = 0; i < n && fits; ++i)
                if (mu[i] > K[i]) fits = false;
            if (!fits) continue;
            for (size_t ci = 0; ci < ncols; ++ci) {
                const Monomial& gamma = pr.columns[ci];
                Monomial beta(n);
                bool ok = true;
                for (size_t i = 0; i < n; ++i) {
                    exp_t rest = K[i] - mu[i];
                    if (gamma[i] > rest) {
                        ok = false;
                        break;
                    }
                    beta[i] = rest - gamma[i];
                }
                if (ok) rows[beta].push_back({ci, term.coeff});
            }
        }
        for (auto& [beta, entries] : rows) {
            std::vector<fp_t> row(ncols, 0);
            for (auto& [ci, c] : entries) row[ci] = ring->field().add(row[ci], c);
            pr.echelon.insert(std::move(row));
        }
    }
    return pr;
}

long long splitting_number_with(const QuotientPresentation& P, const Ideal& U, std::uint64_t q) {
    return build_pairing(P, U, q).rank();
}

long long splitting_number(const QuotientPresentation& P, const CartierSpec& spec, int e) {
    FedderData fd = fedder_data(spec, P, e);
    if (fd.empty) throw Error("Cartier algebra is empty in degree e = " + std::to_string(e));
    return splitting_number_with(P, fd.U, fd.q);
}

NonsplitResult nonsplit_ideal(const QuotientPresentation& P, const CartierSpec& spec, int e) {
    FedderData fd = fedder_data(spec, P, e);
    if (fd.empty) throw Error("Cartier algebra is empty in degree e = " + std::to_string(e));
    Pairing pr = build_pairing(P, fd.U, fd.q);

    NonsplitResult out;
    out.a_e = pr.rank();
    std::vector<Poly> gens;
    for (const auto& v : pr.echelon.kernel_basis()) {
        std::vector<Term> raw;
        for (size_t ci = 0; ci < v.size(); ++ci)
            if (v[ci]) raw.push_back({pr.columns[ci], v[ci]});
        gens.push_back(Poly::from_terms(P.ambient(), std::move(raw)));
    }
    for (size_t i = 0; i < P.ambient()->nvars(); ++i)
        gens.push_back(Poly::variable(P.ambient(), i, static_cast<exp_t>(fd.q)));
    for (const auto& g : P.relations().gens()) gens.push_back(g);
    out.ideal = Ideal(P.ambient(), std::move(gens));

    // a_e-consistency when C_e is cyclic over F^e_* R
    Ideal Iq = P.is_regular() ? Ideal::zero(P.ambient())
                              : bracket_power(P.relations(), fd.q);
    for (const auto& cand : fd.U.gens()) {
        Ideal span = ideal_sum(Ideal(P.ambient(), {cand}), Iq);
        bool all_in = true;
        for (const auto& g : fd.U.gens())
            if (!span.contains(g)) {
                all_in = false;
                break;
            }
        if (all_in) {
            out.cyclic = true;
            break;
        }
    }
    if (out.cyclic && pr.columns.size() <= 2000) {
        auto len = colength(out.ideal);
        out.colength_checked = true;
        out.colength_consistent = len && static_cast<long long>(*len) == out.a_e;
    }
    return out;
}

namespace {

// Drop reduced-GB generators of degree >= q: the m^[q]-scale tail of a
// partial intersection, leaving the stable candidate.
Ideal strip_tail(const Ideal& I, std::uint64_t q) {
    std::vector<Poly> keep;
    for (const auto& g : I.groebner())
        if (g.degree() < q) keep.push_back(g);
    return Ideal(I.ring(), std::move(keep));
}

bool compat_certificate(const QuotientPresentation& P, const CartierSpec& spec, const Ideal& cand,
                        int e_hi) {
    Ideal full = ideal_sum(cand, P.relations());
    if (full.is_unit()) return false;
    for (const auto& g : full.gens())
        if (g.constant_term() != 0) return false;
    for (int e = 1; e <= std::min(e_hi, 2); ++e) {
        FedderData fd;
        try {
            fd = fedder_data(spec, P, e);
        } catch (const Error&) {
            continue;
        }
        if (fd.empty) continue;
        for (const auto& u : fd.U.gens()) {
            for (const auto& h : full.gens()) {
                Ideal root = frobenius_root(u * h, fd.q);
                if (!full.contains(root)) return false;
            }
        }
    }
    return true;
}

}  // namespace

StabilizedIdeal splitting_prime(const QuotientPresentation& P, const CartierSpec& spec,
                                int e_max) {
    if (e_max < 2) throw Error("splitting_prime requires e_max >= 2");
    StabilizedIdeal out;

    int e0 = 0;
    for (int e = 1; e <= e_max; ++e) {
        FedderData fd;
        try {
            fd = fedder_data(spec, P, e);
        } catch (const Error&) {
            continue;  // principal spec off-period
        }
        if (fd.empty) continue;
        if (splitting_number_with(P, fd.U, fd.q) > 0) {
            e0 = e;
            break;
        }
    }
    if (e0 == 0) {
        out.ideal = Ideal::unit(P.ambient());
        out.not_f_pure = true;
        out.stabilized = true;
        out.e_lo = 1;
        out.e_hi = e_max;
        out.notes.push_back("all splitting numbers vanish in the window: not F-pure");
        return out;
    }

    out.e_lo = e0;
    Ideal running;
    Ideal prev_candidate;
    bool have_prev = false;
    for (int e = e0; e <= e_max; e += e0) {
        NonsplitResult ns = nonsplit_ideal(P, spec, e);
        std::uint64_t q = p_power(P.p(), e);
        running = (e == e0) ? ns.ideal : intersect(running, ns.ideal);
        Ideal candidate = strip_tail(running, q);
        out.e_hi = e;
        if (have_prev && candidate.equals(prev_candidate)) {
            out.stabilized = true;
            out.ideal = candidate;
            break;
        }
        prev_candidate = candidate;
        have_prev = true;
        out.ideal = candidate;
    }
    if (ideal_sum(out.ideal, P.relations()).is_unit()) {
        out.not_f_pure = true;
        out.notes.push_back("splitting prime is the unit ideal: not F-pure");
        return out;
    }
    out.compat_certified = compat_certificate(P, spec, out.ideal, e_max);
    if (!out.stabilized)
        out.notes.push_back("candidate did not stabilize within e_max; increase --e-max");
    if (out.compat_certified)
        out.notes.push_back("candidate certified compatible (contained in the splitting prime)");
    return out;
}

namespace {

Rat ratio_of(long long a, std::uint64_t q, int delta) {
    std::int64_t denom = 1;
    for (int i = 0; i < delta; ++i) denom *= static_cast<std::int64_t>(q);
    return Rat(a, denom);
}

}  // namespace

SplittingReport fsignature_with(const QuotientPresentation& P,
                                const std::vector<std::pair<int, Ideal>>& fedder_by_e, int delta) {
    SplittingReport rep;
    rep.delta = delta;
    for (const auto& [e, U] : fedder_by_e) {
        std::uint64_t q = p_power(P.p(), e);
        long long a = splitting_number_with(P, U, q);
        rep.rows.push_back({e, q, a, ratio_of(a, q, delta), true});
    }
    int n = 0;
    for (const auto& r : rep.rows)
        if (r.a_e > 0) n = std::gcd(n, r.e);
    rep.n = n;
    std::vector<const SplittingRow*> usable;
    for (const auto& r : rep.rows)
        if (n > 0 && r.e % n == 0 && r.a_e > 0) usable.push_back(&r);
    if (usable.empty()) {
        rep.estimate = Rat(0);
        rep.error_bar = Rat(0);
        rep.notes.push_back("no nonzero splitting numbers in the window");
        return rep;
    }
    if (usable.size() == 1) {
        rep.estimate = usable[0]->ratio;
        rep.error_bar = usable[0]->ratio;
        rep.notes.push_back("single data point; no extrapolation");
        return rep;
    }
    const SplittingRow* r1 = usable[usable.size() - 2];
    const SplittingRow* r2 = usable[usable.size() - 1];
    // Richardson step for a_e/q^d = s + c/q
    Rat q1(static_cast<std::int64_t>(r1->q)), q2(static_cast<std::int64_t>(r2->q));
    rep.estimate = (q2 * r2->ratio - q1 * r1->ratio) / (q2 - q1);
    rep.error_bar = (rep.estimate - r2->ratio).abs();
    rep.stabilized = true;
    return rep;
}

SplittingReport fsignature_estimate(const QuotientPresentation& P, const CartierSpec& spec,
                                    int e_max) {
    if (e_max < 2) throw Error("fsignature_estimate requires e_max >= 2");
    std::vector<std::pair<int, Ideal>> by_e;
    std::vector<std::string> notes;
    for (int e = 1; e <= e_max; ++e) {
        FedderData fd;
        try {
            fd = fedder_data(spec, P, e);
        } catch (const Error&) {
            notes.push_back("e = " + std::to_string(e) + ": off-period, skipped");
            continue;
        }
        if (fd.empty) {
            notes.push_back("e = " + std::to_string(e) + ": algebra empty in this degree");
            continue;
        }
        by_e.emplace_back(e, fd.U);
    }
    SplittingReport rep = fsignature_with(P, by_e, P.krull_dim());
    for (auto& n : notes) rep.notes.push_back(std::move(n));
    return rep;
}

SplittingReport splitting_ratio(const QuotientPresentation& P, const CartierSpec& spec,
                                int e_max) {
    StabilizedIdeal sp = splitting_prime(P, spec, e_max);
    if (sp.not_f_pure) throw Error("not F-pure: splitting ratio undefined");
    if (sp.ideal.is_zero()) {
        SplittingReport rep = fsignature_estimate(P, spec, e_max);
        rep.notes.push_back("splitting prime is zero: r = s");
        return rep;
    }
    std::vector<Poly> enlarged = P.relations().gens();
    for (const auto& g : sp.ideal.gens()) enlarged.push_back(g);
    QuotientPresentation Pbar(P.ambient(), Ideal(P.ambient(), enlarged));

    std::vector<std::pair<int, Ideal>> by_e;
    for (int e = 1; e <= e_max; ++e) {
        FedderData fd;
        try {
            fd = fedder_data(spec, P, e);
        } catch (const Error&) {
            continue;
        }
        if (fd.empty) continue;
        Ideal pushed = ideal_sum(fd.U, bracket_power(Pbar.relations(), fd.q));
        by_e.emplace_back(e, pushed);
    }
    SplittingReport rep = fsignature_with(Pbar, by_e, Pbar.krull_dim());
    if (!sp.stabilized) rep.notes.push_back("warning: splitting prime did not stabilize");
    rep.notes.push_back("quotient by sp with " + std::to_string(sp.ideal.gens().size()) +
                        " extra relations; delta recomputed = " + std::to_string(rep.delta));
    return rep;
}

}  // namespace frobsig
