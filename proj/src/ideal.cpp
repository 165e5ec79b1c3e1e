#include "frobsig/ideal.hpp"

#include <algorithm>
#include <list>
#include <map>
#include <set>

namespace frobsig {

namespace {

// Division algorithm: remainder of f modulo gens, top reduction until no
// leading monomial of gens divides any remaining term.
Poly divide_remainder(const Poly& f, const std::vector<Poly>& gens) {
    if (gens.empty() || f.is_zero()) return f;
    const RingPtr& R = f.ring();
    const auto& F = R->field();
    Poly rem = Poly::zero(R);
    Poly work = f;
    while (!work.is_zero()) {
        const Term& lt = work.leading_term();
        bool reduced = false;
        for (const Poly& g : gens) {
            if (g.is_zero()) continue;
            if (divides(g.leading_monomial(), lt.mono)) {
                Monomial shift = mono_div(lt.mono, g.leading_monomial());
                fp_t c = F.div(lt.coeff, g.leading_coeff());
                work -= g.times_monomial(shift, c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            // move leading term to the remainder
            Poly lt_poly = Poly::monomial(R, lt.mono, lt.coeff);
            rem += lt_poly;
            work -= lt_poly;
        }
    }
    return rem;
}

struct SPair {
    size_t i, j;
    Monomial lcm;
    std::uint64_t sugar;
};

// Buchberger with the sugar selection strategy and both criteria.
std::vector<Poly> buchberger(const RingPtr& ring, std::vector<Poly> gens) {
    std::vector<Poly> G;
    std::vector<std::uint64_t> sugar_of;
    for (auto& g : gens) {
        if (!g.is_zero()) {
            sugar_of.push_back(g.degree());
            G.push_back(g.monic());
        }
    }
    const auto& ord = ring->order();

    auto make_pair = [&](size_t i, size_t j) {
        Monomial l = mono_lcm(G[i].leading_monomial(), G[j].leading_monomial());
        std::uint64_t si = sugar_of[i] + total_degree(l) - total_degree(G[i].leading_monomial());
        std::uint64_t sj = sugar_of[j] + total_degree(l) - total_degree(G[j].leading_monomial());
        return SPair{i, j, std::move(l), std::max(si, sj)};
    };

    std::list<SPair> pairs;
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) pairs.push_back(make_pair(i, j));

    while (!pairs.empty()) {
        // sugar strategy: smallest sugar, ties by smaller lcm
        auto best = pairs.begin();
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            if (it->sugar < best->sugar ||
                (it->sugar == best->sugar && ord.compare(it->lcm, best->lcm) < 0))
                best = it;
        }
        SPair pr = *best;
        pairs.erase(best);

        // Buchberger's first criterion: coprime leading terms
        if (mono_coprime(G[pr.i].leading_monomial(), G[pr.j].leading_monomial())) continue;
        // chain criterion: some k with LT(k) | lcm and both (i,k), (j,k) gone
        {
            bool skip = false;
            for (size_t k = 0; k < G.size() && !skip; ++k) {
                if (k == pr.i || k == pr.j) continue;
                if (!divides(G[k].leading_monomial(), pr.lcm)) continue;
                bool ik_pending = false, jk_pending = false;
                for (const auto& q : pairs) {
                    if ((q.i == pr.i && q.j == k) || (q.i == k && q.j == pr.i)) ik_pending = true;
                    if ((q.i == pr.j && q.j == k) || (q.i == k && q.j == pr.j)) jk_pending = true;
                }
                if (!ik_pending && !jk_pending) skip = true;
            }
            if (skip) continue;
        }

        const Poly &fi = G[pr.i], &fj = G[pr.j];
        Poly s = fi.times_monomial(mono_div(pr.lcm, fi.leading_monomial()), 1) -
                 fj.times_monomial(mono_div(pr.lcm, fj.leading_monomial()), 1);
        Poly r = divide_remainder(s, G);
        if (r.is_zero()) continue;
        r = r.monic();
        size_t idx = G.size();
        G.push_back(r);
        sugar_of.push_back(pr.sugar);
        for (size_t i = 0; i < idx; ++i) pairs.push_back(make_pair(i, idx));
    }

    // minimize: drop g whose leading monomial is divisible by another's
    std::vector<Poly> min_basis;
    for (size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            if (divides(G[j].leading_monomial(), G[i].leading_monomial())) {
                if (G[j].leading_monomial() == G[i].leading_monomial())
                    redundant = j < i;  // keep the first among equals
                else
                    redundant = true;
            }
        }
        if (!redundant) min_basis.push_back(G[i]);
    }

    // tail-reduce each element against the others
    std::vector<Poly> reduced;
    for (size_t i = 0; i < min_basis.size(); ++i) {
        std::vector<Poly> others;
        for (size_t j = 0; j < min_basis.size(); ++j)
            if (j != i) others.push_back(min_basis[j]);
        reduced.push_back(divide_remainder(min_basis[i], others).monic());
    }
    // canonical ordering: ascending by leading monomial
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return reduced;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : state_(std::make_shared<State>()) {
    state_->ring = std::move(ring);
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.ring()->same(*state_->ring)) throw Error("ideal generator from a different ring");
        state_->gens.push_back(std::move(g));
    }
}

const std::vector<Poly>& Ideal::groebner() const {
    if (!state_) throw Error("empty ideal handle");
    std::lock_guard<std::mutex> lock(state_->mu);
    if (!state_->basis_done) {
        state_->basis = buchberger(state_->ring, state_->gens);
        state_->basis_done = true;
    }
    return state_->basis;
}

bool Ideal::is_unit() const {
    const auto& b = groebner();
    return b.size() == 1 && b[0].is_unit_constant();
}

bool Ideal::contains(const Poly& f) const { return normal_form(f, *this).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
    for (const auto& g : other.gens())
        if (!contains(g)) return false;
    return true;
}

bool Ideal::equals(const Ideal& other) const {
    const auto& a = groebner();
    const auto& b = other.groebner();
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

std::vector<std::string> Ideal::gens_str() const {
    std::vector<std::string> out;
    for (const auto& g : groebner()) out.push_back(g.str());
    return out;
}

Poly normal_form(const Poly& f, const Ideal& I) { return divide_remainder(f, I.groebner()); }

Poly reduce_by(const Poly& f, const std::vector<Poly>& gens) { return divide_remainder(f, gens); }

std::vector<Poly> groebner_basis(const RingPtr& ring, std::vector<Poly> gens) {
    return buchberger(ring, std::move(gens));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    std::vector<Poly> gens = a.gens();
    for (const auto& g : b.gens()) gens.push_back(g);
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    std::vector<Poly> gens;
    if (a.gens().empty() || b.gens().empty()) return Ideal::zero(a.ring());
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) gens.push_back(f * g);
    return Ideal(a.ring(), std::move(gens));
}

Poly map_poly(const Poly& f, const RingPtr& target, const std::vector<int>& var_map) {
    std::vector<Term> raw;
    for (const auto& t : f.terms()) {
        Monomial m(target->nvars(), 0);
        for (size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (var_map[i] < 0) throw Error("map_poly: exponent on an unmapped variable");
            m[static_cast<size_t>(var_map[i])] = t.mono[i];
        }
        raw.push_back({std::move(m), t.coeff});
    }
    return Poly::from_terms(target, std::move(raw));
}

namespace {

// Ring with one fresh elimination variable "@t" in front, block order.
RingPtr aux_ring(const RingPtr& ring) {
    std::vector<std::string> vars{"@t"};
    for (const auto& v : ring->vars()) vars.push_back(v);
    return std::make_shared<const PolyRing>(ring->field(), std::move(vars),
                                            MonomialOrder::block(1));
}

std::vector<int> shift_map(const RingPtr& ring, int offset) {
    std::vector<int> m(ring->nvars());
    for (size_t i = 0; i < ring->nvars(); ++i) m[i] = static_cast<int>(i) + offset;
    return m;
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
    // t*a + (1-t)*b, eliminate t
    RingPtr A = aux_ring(a.ring());
    auto up = shift_map(a.ring(), 1);
    Poly t = Poly::variable(A, 0);
    Poly one_minus_t = Poly::constant(A, 1) - t;
    std::vector<Poly> gens;
    for (const auto& g : a.gens()) gens.push_back(t * map_poly(g, A, up));
    for (const auto& g : b.gens()) gens.push_back(one_minus_t * map_poly(g, A, up));
    Ideal J(A, std::move(gens));
    std::vector<int> down(A->nvars(), -1);
    for (size_t i = 1; i < A->nvars(); ++i) down[i] = static_cast<int>(i) - 1;
    return Ideal(a.ring(), eliminate_block(J, 1, a.ring(), down));
}

std::vector<Poly> eliminate_block(const Ideal& I, size_t split, const RingPtr& target,
                                  const std::vector<int>& var_map) {
    std::vector<Poly> out;
    for (const auto& g : I.groebner()) {
        bool pure = true;
        for (const auto& t : g.terms()) {
            for (size_t i = 0; i < split && pure; ++i)
                if (t.mono[i] != 0) pure = false;
            if (!pure) break;
        }
        if (pure) out.push_back(map_poly(g, target, var_map));
    }
    return out;
}

std::optional<Poly> exact_divide(const Poly& g, const Poly& f) {
    if (f.is_zero()) return std::nullopt;
    const RingPtr& R = g.ring();
    const auto& F = R->field();
    Poly work = g;
    Poly quot = Poly::zero(R);
    while (!work.is_zero()) {
        const Term& lt = work.leading_term();
        if (!divides(f.leading_monomial(), lt.mono)) return std::nullopt;
        Monomial shift = mono_div(lt.mono, f.leading_monomial());
        fp_t c = F.div(lt.coeff, f.leading_coeff());
        quot += Poly::monomial(R, shift, c);
        work -= f.times_monomial(shift, c);
    }
    return quot;
}

Ideal colon_poly(const Ideal& I, const Poly& f) {
    if (f.is_zero()) return Ideal::unit(I.ring());
    if (I.gens().empty()) return Ideal::zero(I.ring());
    Ideal inter = intersect(I, Ideal(I.ring(), {f}));
    std::vector<Poly> gens;
    for (const auto& g : inter.groebner()) {
        auto q = exact_divide(g, f);
        if (!q) throw Error("colon: intersection generator not divisible");
        gens.push_back(std::move(*q));
    }
    return Ideal(I.ring(), std::move(gens));
}

Ideal colon(const Ideal& I, const Ideal& J) {
    if (!I.ring()->same(*J.ring())) throw Error("colon: ring mismatch");
    if (J.gens().empty()) return Ideal::unit(I.ring());  // (I : 0) convention
    bool first = true;
    Ideal acc;
    for (const auto& f : J.gens()) {
        Ideal c = colon_poly(I, f);
        acc = first ? c : intersect(acc, c);
        first = false;
    }
    return acc;
}

Ideal bracket_power(const Ideal& I, std::uint64_t q) {
    std::vector<Poly> gens;
    for (const auto& g : I.gens()) gens.push_back(g.pow(q));
    return Ideal(I.ring(), std::move(gens));
}

Ideal variable_power_ideal(const RingPtr& ring, std::uint64_t q) {
    std::vector<Poly> gens;
    for (size_t i = 0; i < ring->nvars(); ++i)
        gens.push_back(Poly::variable(ring, i, static_cast<exp_t>(q)));
    return Ideal(ring, std::move(gens));
}

Ideal frobenius_root(const Poly& f, std::uint64_t q) {
    std::vector<Poly> gens;
    for (auto& [a, g] : f.frobenius_components(q)) gens.push_back(std::move(g));
    return Ideal(f.ring(), std::move(gens));
}

Ideal frobenius_root(const Ideal& I, std::uint64_t q) {
    std::vector<Poly> gens;
    for (const auto& f : I.gens())
        for (auto& [a, g] : f.frobenius_components(q)) gens.push_back(std::move(g));
    return Ideal(I.ring(), std::move(gens));
}

int krull_dim_of(const Ideal& I) {
    const auto& basis = I.groebner();
    if (!basis.empty() && basis[0].is_unit_constant()) return -1;  // unit ideal
    size_t n = I.ring()->nvars();
    std::vector<Monomial> lts;
    for (const auto& g : basis) lts.push_back(g.leading_monomial());
    int best = 0;
    // independent sets: subsets A with no leading monomial supported in A
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (const auto& m : lts) {
            bool inside = true;
            for (size_t i = 0; i < n && inside; ++i)
                if (m[i] != 0 && !(mask & (1u << i))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

std::optional<std::uint64_t> colength(const Ideal& I) {
    const auto& basis = I.groebner();
    size_t n = I.ring()->nvars();
    if (!basis.empty() && basis[0].is_unit_constant()) return 0;
    // finite iff every variable has a pure power among leading monomials
    std::vector<exp_t> box(n, 0);
    for (size_t i = 0; i < n; ++i) {
        bool found = false;
        for (const auto& g : basis) {
            const Monomial& m = g.leading_monomial();
            if (m[i] == 0) continue;
            bool pure = true;
            for (size_t j = 0; j < n && pure; ++j)
                if (j != i && m[j] != 0) pure = false;
            if (pure) {
                box[i] = found ? std::min(box[i], m[i]) : m[i];
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    std::vector<Monomial> lts;
    for (const auto& g : basis) lts.push_back(g.leading_monomial());
    std::uint64_t count = 0;
    Monomial cur(n, 0);
    // walk the bounded box, counting standard monomials
    while (true) {
        bool standard = true;
        for (const auto& m : lts)
            if (divides(m, cur)) {
                standard = false;
                break;
            }
        if (standard) ++count;
        size_t i = 0;
        while (i < n) {
            if (++cur[i] < box[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return count;
}

std::vector<Monomial> standard_monomials(const Ideal& I) {
    const auto& basis = I.groebner();
    size_t n = I.ring()->nvars();
    std::vector<Monomial> out;
    if (!basis.empty() && basis[0].is_unit_constant()) return out;
    std::vector<exp_t> box(n, 0);
    for (size_t i = 0; i < n; ++i) {
        bool found = false;
        for (const auto& g : basis) {
            const Monomial& m = g.leading_monomial();
            if (m[i] == 0) continue;
            bool pure = true;
            for (size_t j = 0; j < n && pure; ++j)
                if (j != i && m[j] != 0) pure = false;
            if (pure) {
                box[i] = found ? std::min(box[i], m[i]) : m[i];
                found = true;
            }
        }
        if (!found) throw Error("standard_monomials: quotient is not finite-dimensional");
    }
    std::vector<Monomial> lts;
    for (const auto& g : basis) lts.push_back(g.leading_monomial());
    Monomial cur(n, 0);
    while (true) {
        bool standard = true;
        for (const auto& m : lts)
            if (divides(m, cur)) {
                standard = false;
                break;
            }
        if (standard) out.push_back(cur);
        size_t i = 0;
        while (i < n) {
            if (++cur[i] < box[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return out;
}

}  // namespace frobsig
