#pragma once

#include <string_view>

#include "deceq/term.hpp"

namespace deceq {

// Parsers for the canonical prefix syntax produced by ObjType::str() and
// Term::str(). Operation symbols are resolved against `sig`, so the result
// carries full symbol information; unknown names raise UnknownSymbol.
// print(parse(s)) == s for every printed term.
ObjType parse_type(std::string_view text);
Term parse_term(std::string_view text, const Signature& sig);

}  // namespace deceq
