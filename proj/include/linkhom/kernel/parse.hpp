#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "linkhom/errors.hpp"
#include "linkhom/kernel/poly_ring.hpp"

namespace linkhom {

class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, int line, int col)
      : InputError(std::to_string(line) + ":" + std::to_string(col) + ": " + msg), line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

struct Token {
  enum class Kind { Ident, Int, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int col = 1;
};

/// Tokenizer shared by the polynomial and script grammars. Identifiers may
/// contain letters, digits and underscores; `#` and `//` start comments.
class Lexer {
 public:
  explicit Lexer(std::string_view src);

  const Token& peek(std::size_t k = 0) const;
  Token next();
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool is_punct(char c, std::size_t k = 0) const;
  bool is_ident(std::string_view word, std::size_t k = 0) const;
  bool accept(char c);
  Token expect(char c);
  Token expect_ident(const char* what);
  long long expect_int(const char* what);
  [[noreturn]] void fail(const std::string& msg) const;

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

/// Polynomial expressions: sums of products of integers, rationals (a/b),
/// variables and parenthesized expressions, with ^ for powers.
Poly parse_poly(const PolyRing& S, Lexer& lex);
Poly parse_poly(const PolyRing& S, std::string_view text);

}  // namespace linkhom
