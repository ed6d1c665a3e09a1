#pragma once

// Textual elements of K Omega-bar, written right-to-left:
//
//   expr   := term (("+" | "-") term)*
//   term   := ["-"] [number ["/" number] ["*"]] factor (["*"] factor)*
//   factor := atom ["^" ["-"] number]
//   atom   := name "(" number ["," number] ")" | "(" expr ")"
//
// Names: u(i,j), v(i), v_inv(i), e(i), x(i), y(i), z(i), w(i), U(i,j),
// V(i,j).  Juxtaposition composes right-to-left, so "a b" runs b first.
// x(i) = U_{phi(i),i} v_{i,phi(i)} and y(i) = v_{phi(i),i} v_{i,phi(i)};
// z(i) is the loop through i+1 (or the largest neighbour), w(i) the loop
// through i-1 (or the smallest neighbour).  Only v and y take negative
// powers.

#include "plumbing/omega.hpp"

#include <string>

namespace plumbing {

// Throws ParseError, NotComposable (factors that do not meet) and
// NonHomogeneous (summands with different endpoints or degrees).
GradedElement parse_element(const OmegaQuiver& bar, const std::string& text);

// a b = b first, then a.  Throws NotComposable.
GradedElement compose(const GradedQuiver& q, const GradedElement& a, const GradedElement& b);

} // namespace plumbing
