#pragma once

#include "cursor.hpp"
#include "deceq/term.hpp"

namespace deceq::text {

ObjType read_type(Cursor& c);
Term read_term(Cursor& c, const Signature& sig);
Mode read_equation_mode(Cursor& c);

}  // namespace deceq::text
