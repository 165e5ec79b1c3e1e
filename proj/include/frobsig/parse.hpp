#ifndef FROBSIG_PARSE_HPP
#define FROBSIG_PARSE_HPP

#include <string>

#include "poly.hpp"

namespace frobsig {

class ParseError : public Error {
   public:
    ParseError(const std::string& msg, size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    size_t pos() const { return pos_; }

   private:
    size_t pos_;
};

// Canonical polynomial text: +, -, *, ^, integer literals, declared variable
// names, parentheses. Juxtaposition is not multiplication: "xyz" is a single
// identifier and must be a declared variable.
Poly poly_parse(const std::string& text, const RingPtr& ring);

}  // namespace frobsig

#endif
