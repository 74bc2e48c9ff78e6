#include "deceq/imp.hpp"

namespace deceq::imp {

AExpPtr AExp::lit(std::string atom) {
  auto a = std::make_shared<AExp>();
  a->kind = Kind::Lit;
  a->name = std::move(atom);
  return a;
}

AExpPtr AExp::read(std::string loc) {
  auto a = std::make_shared<AExp>();
  a->kind = Kind::Read;
  a->name = std::move(loc);
  return a;
}

AExpPtr AExp::bin(Kind k, AExpPtr x, AExpPtr y) {
  auto a = std::make_shared<AExp>();
  a->kind = k;
  a->lhs = std::move(x);
  a->rhs = std::move(y);
  return a;
}

BExpPtr BExp::constant(bool b) {
  auto e = std::make_shared<BExp>();
  e->kind = b ? Kind::True : Kind::False;
  return e;
}

BExpPtr BExp::cmp(Kind k, AExpPtr x, AExpPtr y) {
  auto e = std::make_shared<BExp>();
  e->kind = k;
  e->x = std::move(x);
  e->y = std::move(y);
  return e;
}

BExpPtr BExp::negate(BExpPtr p) {
  auto e = std::make_shared<BExp>();
  e->kind = Kind::Not;
  e->p = std::move(p);
  return e;
}

BExpPtr BExp::conj(BExpPtr p, BExpPtr q) {
  auto e = std::make_shared<BExp>();
  e->kind = Kind::And;
  e->p = std::move(p);
  e->q = std::move(q);
  return e;
}

CmdPtr Cmd::skip() { return std::make_shared<Cmd>(); }

CmdPtr Cmd::assign(std::string loc, AExpPtr value) {
  auto c = std::make_shared<Cmd>();
  c->kind = Kind::Assign;
  c->name = std::move(loc);
  c->value = std::move(value);
  return c;
}

CmdPtr Cmd::seq(CmdPtr a, CmdPtr b) {
  auto c = std::make_shared<Cmd>();
  c->kind = Kind::Seq;
  c->first = std::move(a);
  c->second = std::move(b);
  return c;
}

CmdPtr Cmd::if_(BExpPtr cond, CmdPtr then_c, CmdPtr else_c) {
  auto c = std::make_shared<Cmd>();
  c->kind = Kind::If;
  c->cond = std::move(cond);
  c->first = std::move(then_c);
  c->second = std::move(else_c);
  return c;
}

CmdPtr Cmd::while_(BExpPtr cond, CmdPtr body) {
  auto c = std::make_shared<Cmd>();
  c->kind = Kind::While;
  c->cond = std::move(cond);
  c->first = std::move(body);
  return c;
}

CmdPtr Cmd::throw_(std::string exc, AExpPtr value) {
  auto c = std::make_shared<Cmd>();
  c->kind = Kind::Throw;
  c->name = std::move(exc);
  c->value = std::move(value);
  return c;
}

CmdPtr Cmd::try_(CmdPtr body, std::vector<Handler> handlers) {
  auto c = std::make_shared<Cmd>();
  c->kind = Kind::TryCatch;
  c->first = std::move(body);
  c->handlers = std::move(handlers);
  return c;
}

namespace {

template <class T>
bool same(const std::shared_ptr<const T>& a, const std::shared_ptr<const T>& b) {
  if (!a || !b) return !a && !b;
  return *a == *b;
}

}  // namespace

bool operator==(const AExp& a, const AExp& b) {
  return a.kind == b.kind && a.name == b.name && same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
}

bool operator==(const BExp& a, const BExp& b) {
  return a.kind == b.kind && same(a.x, b.x) && same(a.y, b.y) && same(a.p, b.p) && same(a.q, b.q);
}

bool operator==(const Cmd& a, const Cmd& b) {
  if (a.kind != b.kind || a.name != b.name || !same(a.value, b.value) || !same(a.cond, b.cond) ||
      !same(a.first, b.first) || !same(a.second, b.second) || a.handlers.size() != b.handlers.size())
    return false;
  for (std::size_t k = 0; k < a.handlers.size(); ++k) {
    const Handler& x = a.handlers[k];
    const Handler& y = b.handlers[k];
    if (x.exception != y.exception || x.binder != y.binder || !same(x.body, y.body)) return false;
  }
  return true;
}

// -- Printing ----------------------------------------------------------------

namespace {

int level(const AExp& a) {
  switch (a.kind) {
    case AExp::Kind::Add:
    case AExp::Kind::Sub: return 1;
    case AExp::Kind::Mul: return 2;
    default: return 3;
  }
}

std::string print_at(const AExp& a, int min_level) {
  std::string s;
  switch (a.kind) {
    case AExp::Kind::Lit:
    case AExp::Kind::Read: return a.name;
    case AExp::Kind::Add: s = print_at(*a.lhs, 1) + " + " + print_at(*a.rhs, 2); break;
    case AExp::Kind::Sub: s = print_at(*a.lhs, 1) + " - " + print_at(*a.rhs, 2); break;
    case AExp::Kind::Mul: s = print_at(*a.lhs, 2) + " * " + print_at(*a.rhs, 3); break;
  }
  return level(a) < min_level ? "(" + s + ")" : s;
}

std::string print_b(const BExp& b, bool operand) {
  switch (b.kind) {
    case BExp::Kind::True: return "true";
    case BExp::Kind::False: return "false";
    case BExp::Kind::Eq: return print(*b.x) + " = " + print(*b.y);
    case BExp::Kind::Le: return print(*b.x) + " <= " + print(*b.y);
    case BExp::Kind::Not: return "not " + print_b(*b.p, true);
    case BExp::Kind::And: {
      std::string s = print_b(*b.p, false) + " and " + print_b(*b.q, true);
      return operand ? "(" + s + ")" : s;
    }
  }
  return "";
}

void print_cmd(const Cmd& c, std::string& out, int indent);

void block(const Cmd& c, std::string& out, int indent) {
  out += "{\n";
  print_cmd(c, out, indent + 2);
  out += "\n" + std::string(indent, ' ') + "}";
}

void print_cmd(const Cmd& c, std::string& out, int indent) {
  std::string pad(indent, ' ');
  switch (c.kind) {
    case Cmd::Kind::Skip: out += pad + "skip"; return;
    case Cmd::Kind::Assign: out += pad + c.name + " := " + print(*c.value); return;
    case Cmd::Kind::Seq:
      print_cmd(*c.first, out, indent);
      out += ";\n";
      print_cmd(*c.second, out, indent);
      return;
    case Cmd::Kind::If:
      out += pad + "if " + print(*c.cond) + " then ";
      block(*c.first, out, indent);
      out += " else ";
      block(*c.second, out, indent);
      return;
    case Cmd::Kind::While:
      out += pad + "while " + print(*c.cond) + " do ";
      block(*c.first, out, indent);
      return;
    case Cmd::Kind::Throw: out += pad + "throw " + c.name + "(" + print(*c.value) + ")"; return;
    case Cmd::Kind::TryCatch:
      out += pad + "try ";
      block(*c.first, out, indent);
      for (const auto& h : c.handlers) {
        out += " catch " + h.exception + "(" + h.binder + ") ";
        block(*h.body, out, indent);
      }
      return;
  }
}

}  // namespace

std::string print(const AExp& a) { return print_at(a, 0); }
std::string print(const BExp& b) { return print_b(b, false); }

std::string print(const Cmd& c) {
  std::string out;
  print_cmd(c, out, 0);
  return out + "\n";
}

}  // namespace deceq::imp
