#include <array>
#include <cctype>

#include "cursor.hpp"
#include "deceq/imp.hpp"

namespace deceq::imp {

namespace {

constexpr std::array<std::string_view, 13> kKeywords = {
    "skip", "if", "then", "else", "while", "do", "throw", "try", "catch", "true", "false", "not", "and"};

bool is_keyword(const std::string& w) {
  for (auto k : kKeywords)
    if (k == w) return true;
  return false;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : c_(src) { c_.set_hash_comments(true); }

  CmdPtr program() {
    CmdPtr p = cmd();
    if (!c_.eof()) c_.fail("unexpected input after command");
    return p;
  }

 private:
  std::string name(const char* what) {
    if (!c_.at_word()) c_.fail(std::string("expected ") + what);
    auto m = c_.mark();
    std::string w = c_.word();
    if (is_keyword(w) || std::isdigit(static_cast<unsigned char>(w[0]))) {
      c_.reset(m);
      c_.fail(std::string("expected ") + what + ", got '" + w + "'");
    }
    return w;
  }

  CmdPtr cmd() {
    CmdPtr first = simple();
    if (c_.accept(';')) return Cmd::seq(first, cmd());
    return first;
  }

  CmdPtr braced() {
    c_.expect('{');
    CmdPtr body = cmd();
    c_.expect('}');
    return body;
  }

  CmdPtr simple() {
    if (c_.accept_keyword("skip")) return Cmd::skip();
    if (c_.accept_keyword("if")) {
      BExpPtr b = bexp();
      if (!c_.accept_keyword("then")) c_.fail("expected 'then'");
      CmdPtr t = braced();
      if (!c_.accept_keyword("else")) c_.fail("expected 'else'");
      return Cmd::if_(b, t, braced());
    }
    if (c_.accept_keyword("while")) {
      BExpPtr b = bexp();
      if (!c_.accept_keyword("do")) c_.fail("expected 'do'");
      return Cmd::while_(b, braced());
    }
    if (c_.accept_keyword("throw")) {
      std::string e = name("exception name");
      c_.expect('(');
      AExpPtr a = aexp();
      c_.expect(')');
      return Cmd::throw_(e, a);
    }
    if (c_.accept_keyword("try")) {
      CmdPtr body = braced();
      std::vector<Handler> hs;
      while (c_.accept_keyword("catch")) {
        Handler h;
        h.exception = name("exception name");
        c_.expect('(');
        h.binder = name("location");
        c_.expect(')');
        h.body = braced();
        hs.push_back(std::move(h));
      }
      if (hs.empty()) c_.fail("expected 'catch'");
      return Cmd::try_(body, std::move(hs));
    }
    std::string loc = name("command");
    c_.expect(":=");
    return Cmd::assign(loc, aexp());
  }

  AExpPtr aexp() {
    AExpPtr a = term();
    while (true) {
      if (c_.accept('+')) a = AExp::bin(AExp::Kind::Add, a, term());
      else if (c_.accept('-')) a = AExp::bin(AExp::Kind::Sub, a, term());
      else return a;
    }
  }

  AExpPtr term() {
    AExpPtr a = factor();
    while (c_.accept('*')) a = AExp::bin(AExp::Kind::Mul, a, factor());
    return a;
  }

  AExpPtr factor() {
    if (c_.accept('(')) {
      AExpPtr a = aexp();
      c_.expect(')');
      return a;
    }
    if (!c_.at_word()) c_.fail("expected expression");
    auto m = c_.mark();
    std::string w = c_.word();
    if (std::isdigit(static_cast<unsigned char>(w[0]))) return AExp::lit(w);
    c_.reset(m);
    return AExp::read(name("location or literal"));
  }

  BExpPtr bexp() {
    BExpPtr b = bconj();
    while (c_.accept_keyword("and")) b = BExp::conj(b, bconj());
    return b;
  }

  BExpPtr bconj() {
    if (c_.accept_keyword("not")) return BExp::negate(bconj());
    if (c_.accept_keyword("true")) return BExp::constant(true);
    if (c_.accept_keyword("false")) return BExp::constant(false);
    if (c_.peek() == '(') {
      // Either a parenthesised boolean or a comparison starting with '('.
      auto m = c_.mark();
      try {
        c_.expect('(');
        BExpPtr b = bexp();
        c_.expect(')');
        return b;
      } catch (const Error&) {
        c_.reset(m);
      }
    }
    AExpPtr x = aexp();
    BExp::Kind k;
    if (c_.accept("<=") || c_.accept("≤")) k = BExp::Kind::Le;
    else if (c_.accept('=')) k = BExp::Kind::Eq;
    else c_.fail("expected '=' or '<='");
    return BExp::cmp(k, x, aexp());
  }

  text::Cursor c_;
};

}  // namespace

CmdPtr parse(std::string_view source) { return Parser(source).program(); }

CmdPtr load(const std::string& path) { return parse(read_file(path)); }

}  // namespace deceq::imp
