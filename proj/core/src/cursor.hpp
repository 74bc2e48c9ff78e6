#pragma once

// Character cursor shared by the text formats (terms, models, theories,
// proof scripts, IMP). Internal to the library.

#include <cctype>
#include <string>
#include <string_view>

#include "deceq/error.hpp"

namespace deceq::text {

class Cursor {
 public:
  explicit Cursor(std::string_view src) : src_(src) {}

  bool eof() {
    skip_ws();
    return pos_ >= src_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance(1);
    return true;
  }

  bool accept(std::string_view word) {
    skip_ws();
    if (src_.substr(pos_, word.size()) != word) return false;
    advance(word.size());
    return true;
  }

  // Accepts `word` only when it is not a prefix of a longer identifier.
  bool accept_keyword(std::string_view word) {
    skip_ws();
    if (src_.substr(pos_, word.size()) != word) return false;
    std::size_t end = pos_ + word.size();
    if (end < src_.size() && is_ident_char(src_[end])) return false;
    advance(word.size());
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void expect(std::string_view word) {
    if (!accept(word)) fail("expected '" + std::string(word) + "'");
  }

  // [A-Za-z0-9_]+
  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && is_ident_char(src_[pos_])) advance(1);
    if (start == pos_) fail("expected identifier");
    return std::string(src_.substr(start, pos_ - start));
  }

  bool at_word() {
    skip_ws();
    return pos_ < src_.size() && is_ident_char(src_[pos_]);
  }

  std::string rest_of_line() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && src_[pos_] != '\n') advance(1);
    return std::string(src_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) {
    skip_ws();
    throw Error(ErrorKind::SyntaxError,
                std::to_string(line_) + ":" + std::to_string(col_) + ": " + what);
  }

  int line() const { return line_; }
  int col() const { return col_; }
  std::size_t pos() const { return pos_; }

  struct Mark {
    std::size_t pos;
    int line, col;
  };
  Mark mark() const { return {pos_, line_, col_}; }
  void reset(const Mark& m) {
    pos_ = m.pos;
    line_ = m.line;
    col_ = m.col;
  }

  // When set, '#' starts a comment running to end of line.
  void set_hash_comments(bool on) { hash_comments_ = on; }
  // When set, newlines are not whitespace (line-oriented formats).
  void set_newline_significant(bool on) { newline_significant_ = on; }

  bool at_newline() {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == '\n';
  }

 private:
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i, ++pos_) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

  void skip_ws() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n' && newline_significant_) return;
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else if (c == '#' && hash_comments_) {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance(1);
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  bool hash_comments_ = false;
  bool newline_significant_ = false;
};

}  // namespace deceq::text
