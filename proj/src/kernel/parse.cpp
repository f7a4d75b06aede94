#include "linkhom/kernel/parse.hpp"

#include <cctype>

namespace linkhom {

Lexer::Lexer(std::string_view src) {
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    std::size_t j = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = Token::Kind::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Token::Kind::Int;
    } else if (std::string_view("+-*/^()[],;=:{}").find(c) != std::string_view::npos) {
      j = i + 1;
      t.kind = Token::Kind::Punct;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    t.text = std::string(src.substr(i, j - i));
    advance(j - i);
    toks_.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.col = col;
  toks_.push_back(end);
}

const Token& Lexer::peek(std::size_t k) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }

Token Lexer::next() {
  Token t = peek();
  if (pos_ + 1 < toks_.size()) ++pos_;
  return t;
}

bool Lexer::is_punct(char c, std::size_t k) const {
  const Token& t = peek(k);
  return t.kind == Token::Kind::Punct && t.text[0] == c;
}

bool Lexer::is_ident(std::string_view word, std::size_t k) const {
  const Token& t = peek(k);
  return t.kind == Token::Kind::Ident && t.text == word;
}

bool Lexer::accept(char c) {
  if (!is_punct(c)) return false;
  next();
  return true;
}

Token Lexer::expect(char c) {
  if (!is_punct(c)) {
    const Token& t = peek();
    fail(std::string("expected '") + c + "' but found " + (t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'"));
  }
  return next();
}

Token Lexer::expect_ident(const char* what) {
  if (peek().kind != Token::Kind::Ident) fail(std::string("expected ") + what);
  return next();
}

long long Lexer::expect_int(const char* what) {
  bool negative = accept('-');
  if (peek().kind != Token::Kind::Int) fail(std::string("expected ") + what);
  Token t = next();
  if (t.text.size() > 15) throw ParseError("integer too large", t.line, t.col);
  long long v = std::stoll(t.text);
  return negative ? -v : v;
}

void Lexer::fail(const std::string& msg) const {
  const Token& t = peek();
  throw ParseError(msg, t.line, t.col);
}

namespace {

class PolyParser {
 public:
  PolyParser(const PolyRing& S, Lexer& lex) : S_(S), lex_(lex) {}

  Poly expr() {
    Poly acc;
    bool negate = false;
    if (lex_.accept('-')) {
      negate = true;
    } else {
      lex_.accept('+');
    }
    Poly t = term();
    acc = negate ? S_.neg(t) : t;
    for (;;) {
      if (lex_.accept('+')) {
        acc = S_.add(acc, term());
      } else if (lex_.accept('-')) {
        acc = S_.sub(acc, term());
      } else {
        return acc;
      }
    }
  }

 private:
  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (lex_.accept('*')) {
        acc = S_.mul_poly(acc, factor());
      } else if (lex_.is_punct('/')) {
        Token at = lex_.next();
        Poly d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at.line, at.col);
        if (d.terms.size() != 1 || !d.lead().mono.is_one()) {
          throw ParseError("only division by a nonzero constant is allowed", at.line, at.col);
        }
        acc = S_.scale(acc, S_.field().inv(d.lead().coeff));
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly base = atom();
    if (lex_.is_punct('^')) {
      Token at = lex_.next();
      if (lex_.peek().kind != Token::Kind::Int) lex_.fail("expected exponent");
      Token e = lex_.next();
      if (e.text.size() > 5) throw ParseError("exponent too large", e.line, e.col);
      int n = std::stoi(e.text);
      Poly r = S_.constant(1);
      for (int k = 0; k < n; ++k) r = S_.mul_poly(r, base);
      (void)at;
      return r;
    }
    return base;
  }

  Poly atom() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Int) {
      Token n = lex_.next();
      return S_.constant(Scalar(mpz_class(n.text)));
    }
    if (t.kind == Token::Kind::Ident) {
      Token id = lex_.next();
      for (std::size_t v = 0; v < S_.nvars(); ++v) {
        if (S_.names()[v] == id.text) return S_.var_poly(v);
      }
      throw ParseError("unknown variable '" + id.text + "'", id.line, id.col);
    }
    if (lex_.accept('(')) {
      Poly p = expr();
      lex_.expect(')');
      return p;
    }
    lex_.fail("expected a polynomial term");
  }

  const PolyRing& S_;
  Lexer& lex_;
};

}  // namespace

Poly parse_poly(const PolyRing& S, Lexer& lex) { return PolyParser(S, lex).expr(); }

Poly parse_poly(const PolyRing& S, std::string_view text) {
  Lexer lex(text);
  Poly p = parse_poly(S, lex);
  if (!lex.at_end()) lex.fail("unexpected trailing input");
  return p;
}

}  // namespace linkhom
