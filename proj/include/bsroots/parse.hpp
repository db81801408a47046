#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bsroots/poly.hpp"

namespace bsroots {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset) : std::runtime_error(what), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := ('+'|'-')* base ('^' uint)?; base := int | var | '(' expr ')'.
/// Whitespace is ignored; integers are reduced into the ring.
Poly parse_poly(const std::string& src, const std::vector<std::string>& variables, const ChainRing& ring);

}  // namespace bsroots
