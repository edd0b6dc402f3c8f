#pragma once

#include "revring/multipoly.hpp"

#include <string>

namespace revring {

// Polynomial text grammar, round-tripping bit-exactly with MultiPoly::str():
//   poly  := [-] term (('+'|'-') term)*
//   term  := coef | coef '*' mono | mono
//   mono  := factor ('*' factor)*      factor := 'x' <int> [ '^' <int> ]
//   coef  := <int> | <int> '/' <int>
// Whitespace is permitted between tokens. Throws SyntaxError with position.
MultiPoly parse_poly(const std::string& text);

} // namespace revring
