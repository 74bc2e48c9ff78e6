#include <sstream>

#include "cursor.hpp"
#include "deceq/theory.hpp"
#include "text_internal.hpp"

namespace deceq {

std::string print_theory(const Theory& t) {
  std::ostringstream os;
  os << "theory " << to_string(t.flavor) << "\n";
  for (const auto& op : t.signature.ops()) {
    os << "op " << op.name << " : " << op.source << " -> " << op.target << " @ " << op.decoration
       << " " << to_string(op.prim.kind);
    if (!op.prim.subject.empty()) os << " " << op.prim.subject;
    os << "\n";
  }
  for (const auto& ax : t.axioms)
    os << "axiom " << ax.label << " " << to_string(ax.mode) << " " << ax.lhs << " = " << ax.rhs << "\n";
  for (const auto& r : t.observational_rules) {
    os << "obs " << (r.direction == ObsRule::Direction::States ? "states" : "exceptions");
    for (const auto& o : r.observers) os << " " << o.name;
    os << "\n";
  }
  return os.str();
}

namespace {

Decoration read_level(text::Cursor& c) {
  std::string w = c.word();
  if (w == "0") return Decoration::Pure;
  if (w == "1") return Decoration::Ro;
  if (w == "2") return Decoration::Rw;
  c.fail("decoration level must be 0, 1 or 2");
}

Mode read_mode(text::Cursor& c) {
  if (c.accept_keyword("strong")) return Mode::Strong;
  if (c.accept_keyword("weak")) return Mode::Weak;
  c.fail("expected 'strong' or 'weak'");
}

void end_line(text::Cursor& c) {
  if (c.eof()) return;
  if (!c.at_newline()) c.fail("expected end of line");
  while (c.at_newline()) c.accept('\n');
}

}  // namespace

namespace text {

Mode read_equation_mode(Cursor& c) { return read_mode(c); }

}  // namespace text

Theory parse_theory(std::string_view src) {
  text::Cursor c(src);
  c.set_hash_comments(true);
  c.set_newline_significant(true);
  while (c.at_newline()) c.accept('\n');

  Theory t;
  c.expect("theory");
  std::string flavor = c.word();
  if (flavor == "states") t.flavor = Flavor::States;
  else if (flavor == "exceptions") t.flavor = Flavor::Exceptions;
  else if (flavor == "combined") t.flavor = Flavor::Combined;
  else c.fail("unknown flavor " + flavor);
  end_line(c);

  while (!c.eof()) {
    if (c.accept_keyword("op")) {
      OpSymbol op;
      op.name = c.word();
      c.expect(':');
      op.source = text::read_type(c);
      c.expect("->");
      op.target = text::read_type(c);
      c.expect('@');
      c.expect('(');
      op.decoration.state = read_level(c);
      c.expect(',');
      op.decoration.exc = read_level(c);
      c.expect(')');
      std::string kind = c.word();
      auto k = prim_kind_from_string(kind);
      if (!k) c.fail("unknown primitive " + kind);
      op.prim.kind = *k;
      if (c.at_word()) op.prim.subject = c.word();
      t.signature.add(std::move(op));
    } else if (c.accept_keyword("axiom")) {
      Equation eq;
      eq.label = c.word();
      eq.mode = read_mode(c);
      eq.lhs = text::read_term(c, t.signature);
      c.expect('=');
      eq.rhs = text::read_term(c, t.signature);
      if (!parallel(eq)) c.fail("axiom " + eq.label + " is not a well-typed parallel pair");
      t.axioms.push_back(std::move(eq));
    } else if (c.accept_keyword("obs")) {
      ObsRule r;
      std::string dir = c.word();
      if (dir == "states") r.direction = ObsRule::Direction::States;
      else if (dir == "exceptions") r.direction = ObsRule::Direction::Exceptions;
      else c.fail("obs direction must be 'states' or 'exceptions'");
      while (c.at_word()) {
        std::string name = c.word();
        const OpSymbol* o = t.signature.find(name);
        if (!o) throw Error(ErrorKind::UnknownSymbol, "observer " + name + " is not declared");
        r.observers.push_back(*o);
      }
      t.observational_rules.push_back(std::move(r));
    } else {
      c.fail("expected 'op', 'axiom' or 'obs'");
    }
    end_line(c);
  }
  return t;
}

}  // namespace deceq
