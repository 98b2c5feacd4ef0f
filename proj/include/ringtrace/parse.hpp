#pragma once

#include <string>

#include "ringtrace/poly.hpp"

namespace ringtrace {

// Polynomial text grammar: variables are identifiers; `^` integer powers;
// `*` explicit or implicit multiplication (juxtaposition); `+`/`-`; integer
// and fraction literals `p/q`; parentheses. Whitespace insensitive.
Poly parse_poly(const RingPtr& ring, const std::string& text);

}  // namespace ringtrace
