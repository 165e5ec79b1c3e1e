#ifndef FROBSIG_PRIME_FIELD_HPP
#define FROBSIG_PRIME_FIELD_HPP

#include <cstdint>
#include <stdexcept>

namespace frobsig {

using fp_t = std::uint32_t;

// F_p with p prime, 2 <= p <= 97. Elements are machine integers in [0, p).
class PrimeField {
   public:
    explicit PrimeField(fp_t p) : p_(p) {
        if (!is_prime(p) || p > 97) throw std::invalid_argument("characteristic must be prime and <= 97");
    }

    fp_t p() const { return p_; }

    fp_t reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<fp_t>(r);
    }

    fp_t add(fp_t a, fp_t b) const {
        fp_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    fp_t sub(fp_t a, fp_t b) const { return a >= b ? a - b : a + p_ - b; }
    fp_t neg(fp_t a) const { return a == 0 ? 0 : p_ - a; }
    fp_t mul(fp_t a, fp_t b) const { return (a * b) % p_; }

    fp_t inv(fp_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero in F_p");
        // extended Euclid on (a, p)
        std::int64_t t = 0, newt = 1, r = p_, newr = a;
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += p_;
        return static_cast<fp_t>(t);
    }

    fp_t div(fp_t a, fp_t b) const { return mul(a, inv(b)); }

    fp_t pow(fp_t a, std::uint64_t e) const {
        fp_t r = 1, base = a % p_;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

    static bool is_prime(fp_t n) {
        if (n < 2) return false;
        for (fp_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

   private:
    fp_t p_;
};

}  // namespace frobsig

#endif
