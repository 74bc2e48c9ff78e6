#include "deceq/term_text.hpp"

#include "cursor.hpp"
#include "text_internal.hpp"

namespace deceq {

namespace text {

ObjType read_type(Cursor& c) {
  if (c.accept_keyword("unit")) return ObjType::unit();
  if (c.accept_keyword("empty")) return ObjType::empty();
  bool is_prod = c.accept_keyword("prod");
  if (is_prod || c.accept_keyword("sum")) {
    c.expect('(');
    ObjType l = read_type(c);
    c.expect(',');
    ObjType r = read_type(c);
    c.expect(')');
    return is_prod ? ObjType::prod(l, r) : ObjType::sum(l, r);
  }
  return ObjType::base(c.word());
}

Term read_term(Cursor& c, const Signature& sig) {
  auto typed = [&](auto make) {
    c.expect('(');
    ObjType t = read_type(c);
    c.expect(')');
    return make(t);
  };
  auto binary = [&](auto make) {
    c.expect('(');
    Term a = read_term(c, sig);
    c.expect(',');
    Term b = read_term(c, sig);
    c.expect(')');
    return make(a, b);
  };

  std::string head = c.word();
  if (head == "id") return typed(Term::id);
  if (head == "comp") return binary(Term::comp);
  if (head == "pair") return binary(Term::pair);
  if (head == "case") return binary(Term::cases);
  if (head == "proj1") return typed(Term::proj1);
  if (head == "proj2") return typed(Term::proj2);
  if (head == "inj1") return typed(Term::inj1);
  if (head == "inj2") return typed(Term::inj2);
  if (head == "bang") return typed(Term::bang);
  if (head == "absurd") return typed(Term::absurd);
  if (head == "op") {
    c.expect('(');
    std::string name = c.word();
    c.expect(')');
    const OpSymbol* sym = sig.find(name);
    if (!sym) throw Error(ErrorKind::UnknownSymbol, "undeclared symbol " + name);
    return Term::op(*sym);
  }
  if (head == "const") {
    c.expect('(');
    ObjType t = read_type(c);
    c.expect(',');
    std::string atom = c.word();
    c.expect(')');
    return Term::constant(t, atom);
  }
  c.fail("unknown term constructor '" + head + "'");
}

}  // namespace text

ObjType parse_type(std::string_view src) {
  text::Cursor c(src);
  ObjType t = text::read_type(c);
  if (!c.eof()) c.fail("trailing input after type");
  return t;
}

Term parse_term(std::string_view src, const Signature& sig) {
  text::Cursor c(src);
  Term t = text::read_term(c, sig);
  if (!c.eof()) c.fail("trailing input after term");
  return t;
}

}  // namespace deceq
