#include "frobsig/poly.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace frobsig {

Poly Poly::constant(RingPtr ring, std::int64_t c) {
    Poly f(ring);
    fp_t v = ring->field().reduce(c);
    if (v != 0) f.terms_.push_back({Monomial(ring->nvars(), 0), v});
    return f;
}

Poly Poly::variable(RingPtr ring, size_t index, exp_t e) {
    if (index >= ring->nvars()) throw Error("variable index out of range");
    Monomial m(ring->nvars(), 0);
    m[index] = e;
    return monomial(std::move(ring), std::move(m), 1);
}

Poly Poly::monomial(RingPtr ring, Monomial m, fp_t c) {
    Poly f(ring);
    if (m.size() != ring->nvars()) throw Error("exponent vector length mismatch");
    if (c % ring->p() != 0) f.terms_.push_back({std::move(m), c % ring->p()});
    return f;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> raw) {
    const auto& ord = ring->order();
    std::sort(raw.begin(), raw.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
    Poly f(ring);
    for (auto& t : raw) {
        if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
            fp_t c = ring->field().add(f.terms_.back().coeff, t.coeff % ring->p());
            if (c == 0)
                f.terms_.pop_back();
            else
                f.terms_.back().coeff = c;
        } else {
            fp_t c = t.coeff % ring->p();
            if (c != 0) f.terms_.push_back({std::move(t.mono), c});
        }
    }
    return f;
}

fp_t Poly::coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return 0;
}

fp_t Poly::constant_term() const {
    if (terms_.empty()) return 0;
    const Term& last = terms_.back();
    return total_degree(last.mono) == 0 ? last.coeff : 0;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    if (!ring_) return o;
    if (!o.ring_) return *this;
    const auto& ord = ring_->order();
    const auto& F = ring_->field();
    Poly r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ord.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0)
            r.terms_.push_back(terms_[i++]);
        else if (c < 0)
            r.terms_.push_back(o.terms_[j++]);
        else {
            fp_t s = F.add(terms_[i].coeff, o.terms_[j].coeff);
            if (s != 0) r.terms_.push_back({terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (!ring_ || !o.ring_ || is_zero() || o.is_zero()) return Poly(ring_ ? ring_ : o.ring_);
    const auto& F = ring_->field();
    // accumulate into a map keyed by monomial, then rebuild sorted
    std::unordered_map<Monomial, fp_t, MonomialHash> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = mono_mul(a.mono, b.mono);
            fp_t& slot = acc[std::move(m)];
            slot = F.add(slot, F.mul(a.coeff, b.coeff));
        }
    }
    std::vector<Term> raw;
    raw.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) raw.push_back({m, c});
    return from_terms(ring_, std::move(raw));
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono) return false;
    return true;
}

Poly Poly::scaled(fp_t c) const {
    c %= ring_ ? ring_->p() : 2;
    if (c == 0 || is_zero()) return Poly(ring_);
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, ring_->field().mul(t.coeff, c)});
    return r;
}

Poly Poly::times_monomial(const Monomial& m, fp_t c) const {
    c %= ring_->p();
    if (c == 0 || is_zero()) return Poly(ring_);
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back({mono_mul(t.mono, m), ring_->field().mul(t.coeff, c)});
    return r;
}

Poly Poly::pow(std::uint64_t e) const {
    Poly r = Poly::constant(ring_, 1);
    Poly base = *this;
    while (e) {
        if (e & 1) r *= base;
        if (e >>= 1) base *= base;
    }
    return r;
}

Poly Poly::frobenius(std::uint64_t q) const {
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(t.mono);
        for (auto& e : m) e = static_cast<exp_t>(e * q);
        r.terms_.push_back({std::move(m), t.coeff});  // c^q = c on F_p
    }
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field().inv(leading_coeff()));
}

Poly Poly::substitute(const RingPtr& target, const std::vector<Poly>& images) const {
    if (images.size() != ring_->nvars()) throw Error("substitute: wrong image count");
    Poly r = Poly::zero(target);
    for (const auto& t : terms_) {
        Poly term = Poly::constant(target, t.coeff);
        for (size_t i = 0; i < images.size(); ++i)
            if (t.mono[i]) term *= images[i].pow(t.mono[i]);
        r += term;
    }
    return r;
}

Poly Poly::phi_apply(std::uint64_t q) const {
    Poly r(ring_);
    std::vector<Term> raw;
    for (const auto& t : terms_) {
        bool ok = true;
        Monomial m(t.mono.size());
        for (size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] % q != q - 1) {
                ok = false;
                break;
            }
            m[i] = static_cast<exp_t>((t.mono[i] - (q - 1)) / q);
        }
        if (ok) raw.push_back({std::move(m), t.coeff});
    }
    return from_terms(ring_, std::move(raw));
}

std::vector<std::pair<Monomial, Poly>> Poly::frobenius_components(std::uint64_t q) const {
    std::map<Monomial, std::vector<Term>> buckets;
    for (const auto& t : terms_) {
        Monomial a(t.mono.size()), g(t.mono.size());
        for (size_t i = 0; i < t.mono.size(); ++i) {
            a[i] = static_cast<exp_t>(t.mono[i] % q);
            g[i] = static_cast<exp_t>(t.mono[i] / q);
        }
        buckets[a].push_back({std::move(g), t.coeff});
    }
    std::vector<std::pair<Monomial, Poly>> out;
    out.reserve(buckets.size());
    for (auto& [a, raw] : buckets) out.emplace_back(a, from_terms(ring_, std::move(raw)));
    return out;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        fp_t c = t.coeff;
        if (first) {
            first = false;
        } else {
            os << " + ";
        }
        bool has_vars = total_degree(t.mono) > 0;
        if (c != 1 || !has_vars) {
            os << c;
            if (has_vars) os << "*";
        }
        bool firstv = true;
        for (size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << ring_->vars()[i];
            if (t.mono[i] > 1) os << "^" << t.mono[i];
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << f.str(); }

}  // namespace frobsig
