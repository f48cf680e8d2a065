#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "hopfcoh/scalar_io.hpp"

namespace hopfcoh::detail {

// Shared tokenizer for datum files and inline scalars. Tokens are integers,
// identifiers (letters, digits, '.', '_'), and single punctuation characters.
// '#' starts a comment running to end of line.
class Lexer {
 public:
  enum class Kind { Int, Ident, Punct, End };

  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  Kind kind() const { return kind_; }
  const std::string& ident() const { return ident_; }
  long long int_value() const { return int_value_; }
  char punct() const { return punct_; }
  int line() const { return tok_line_; }
  int column() const { return tok_col_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, tok_line_, tok_col_);
  }

  void advance() {
    skip_space();
    tok_line_ = line_;
    tok_col_ = col_;
    if (pos_ >= text_.size()) {
      kind_ = Kind::End;
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + (text_[pos_] - '0');
        step();
      }
      kind_ = Kind::Int;
      int_value_ = v;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      ident_.clear();
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.') {
          ident_.push_back(d);
          step();
        } else {
          break;
        }
      }
      kind_ = Kind::Ident;
      return;
    }
    kind_ = Kind::Punct;
    punct_ = c;
    step();
  }

  bool accept_punct(char c) {
    if (kind_ == Kind::Punct && punct_ == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect_punct(char c) {
    if (!accept_punct(c)) fail(std::string("expected '") + c + "'");
  }

  long long expect_int() {
    bool neg = accept_punct('-');
    if (kind_ != Kind::Int) fail("expected integer");
    long long v = int_value_;
    advance();
    return neg ? -v : v;
  }

 private:
  void step() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') step();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        step();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  int tok_line_ = 1, tok_col_ = 1;
  Kind kind_ = Kind::End;
  std::string ident_;
  long long int_value_ = 0;
  char punct_ = 0;
};

// scalar := ['-'] term (('+'|'-') term)*
CycNum parse_scalar_tokens(Lexer& lex);

}  // namespace hopfcoh::detail
