#ifndef FROBSIG_QUOTIENT_HPP
#define FROBSIG_QUOTIENT_HPP

#include "ideal.hpp"

namespace frobsig {

// Graded-local quotient R = S/I, maximal ideal generated by the variables.
// "Local" always means the homogeneous maximal ideal here; the paper's
// complete local rings are modeled by their graded cores.
class QuotientPresentation {
   public:
    QuotientPresentation(RingPtr ambient, Ideal relations)
        : ambient_(std::move(ambient)), relations_(std::move(relations)) {
        for (const auto& g : relations_.gens())
            if (g.constant_term() != 0)
                throw Error("relation with nonzero constant term (I must lie in m)");
    }

    static QuotientPresentation regular(RingPtr ambient) {
        Ideal z = Ideal::zero(ambient);
        return QuotientPresentation(std::move(ambient), std::move(z));
    }

    const RingPtr& ambient() const { return ambient_; }
    const Ideal& relations() const { return relations_; }
    bool is_regular() const { return relations_.gens().empty(); }
    fp_t p() const { return ambient_->p(); }

    int krull_dim() const {
        std::call_once(dim_once_, [&] { dim_ = krull_dim_of(relations_); });
        return dim_;
    }

    Poly reduce(const Poly& f) const { return normal_form(f, relations_); }

   private:
    RingPtr ambient_;
    Ideal relations_;
    mutable std::once_flag dim_once_;
    mutable int dim_ = -2;
};

}  // namespace frobsig

#endif
