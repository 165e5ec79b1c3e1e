#ifndef FROBSIG_RING_HPP
#define FROBSIG_RING_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "monomial.hpp"
#include "prime_field.hpp"

namespace frobsig {

class Error : public std::runtime_error {
   public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Monomial order. DegRevLex over the whole variable range, or a block order
// (degrevlex within each block, first block dominates) used for elimination.
struct MonomialOrder {
    enum Kind { DegRevLex, Block } kind = DegRevLex;
    size_t block_split = 0;  // first block = vars [0, block_split)

    static MonomialOrder degrevlex() { return {DegRevLex, 0}; }
    static MonomialOrder block(size_t split) { return {Block, split}; }

    // 3-way compare: negative if a < b, 0 if equal, positive if a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        if (kind == DegRevLex) return cmp_drl(a, b, 0, a.size());
        int c = cmp_drl(a, b, 0, block_split);
        if (c != 0) return c;
        return cmp_drl(a, b, block_split, a.size());
    }

   private:
    static int cmp_drl(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
        std::int64_t da = 0, db = 0;
        for (size_t i = lo; i < hi; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da < db ? -1 : 1;
        // graded reverse lex: last nonzero entry of a-b negative => a > b
        for (size_t i = hi; i-- > lo;) {
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
        return 0;
    }
};

// Ambient polynomial ring F_p[x_1..x_n] with a fixed monomial order.
class PolyRing {
   public:
    PolyRing(PrimeField field, std::vector<std::string> vars,
             MonomialOrder order = MonomialOrder::degrevlex())
        : field_(field), vars_(std::move(vars)), order_(order) {
        std::unordered_set<std::string> seen;
        for (const auto& v : vars_) {
            if (v.empty()) throw Error("empty variable name");
            if (!seen.insert(v).second) throw Error("duplicate variable name: " + v);
        }
    }

    const PrimeField& field() const { return field_; }
    fp_t p() const { return field_.p(); }
    size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const MonomialOrder& order() const { return order_; }

    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool same(const PolyRing& o) const {
        return field_ == o.field_ && vars_ == o.vars_ && order_.kind == o.order_.kind &&
               order_.block_split == o.order_.block_split;
    }

   private:
    PrimeField field_;
    std::vector<std::string> vars_;
    MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(fp_t p, std::vector<std::string> vars,
                         MonomialOrder order = MonomialOrder::degrevlex()) {
    return std::make_shared<const PolyRing>(PrimeField(p), std::move(vars), order);
}

}  // namespace frobsig

#endif
