#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nilcayley/matrix.hpp"
#include "nilcayley/ring.hpp"

namespace nilcayley {

/// Syntax or lookup error with source position (1-based line and column).
class ParseError : public ring_error {
public:
  ParseError(const std::string& message, int line, int column)
      : ring_error(message + " at line " + std::to_string(line) + ", column " +
                   std::to_string(column)),
        line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

namespace detail_parser {

enum class Tok { number, ident, plus, minus, star, caret, slash, lparen, rparen,
                 lbracket, rbracket, comma, semicolon, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
                                  src_[pos_] == '\r')) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    current_ = {Tok::end, "", line_, col_};
    if (pos_ >= src_.size()) return;
    const char c = src_[pos_];
    const int line = line_, col = col_;
    auto single = [&](Tok k) {
      ++pos_;
      ++col_;
      current_ = {k, std::string(1, c), line, col};
    };
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++col_;
      }
      current_ = {Tok::number, std::string(src_.substr(start, pos_ - start)), line, col};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])))) {
        ++pos_;
        ++col_;
      }
      current_ = {Tok::ident, std::string(src_.substr(start, pos_ - start)), line, col};
      return;
    }
    switch (c) {
      case '+': single(Tok::plus); return;
      case '-': single(Tok::minus); return;
      case '*': single(Tok::star); return;
      case '^': single(Tok::caret); return;
      case '/': single(Tok::slash); return;
      case '(': single(Tok::lparen); return;
      case ')': single(Tok::rparen); return;
      case '[': single(Tok::lbracket); return;
      case ']': single(Tok::rbracket); return;
      case ',': single(Tok::comma); return;
      case ';': single(Tok::semicolon); return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_{Tok::end, "", 1, 1};
};

template <RingBackend B>
class ElementParser {
public:
  ElementParser(const B& ring, Lexer& lex) : ring_(ring), lex_(lex) {}

  typename B::Element expr() {
    typename B::Element acc = term();
    while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
      const Token op = lex_.next();
      const typename B::Element rhs = term();
      acc = op.kind == Tok::plus ? ring_.add(acc, rhs) : ring_.sub(acc, rhs);
    }
    return acc;
  }

private:
  typename B::Element term() {
    typename B::Element acc = factor();
    while (lex_.peek().kind == Tok::star) {
      lex_.next();
      acc = ring_.mul(acc, factor());
    }
    return acc;
  }

  typename B::Element factor() {
    typename B::Element base = atom();
    if (lex_.peek().kind == Tok::caret) {
      lex_.next();
      const Token e = lex_.next();
      if (e.kind != Tok::number) throw ParseError("expected integer exponent", e.line, e.column);
      if (e.text.size() > 6) throw ParseError("exponent overflow", e.line, e.column);
      const std::uint32_t exponent = static_cast<std::uint32_t>(std::stoul(e.text));
      if (exponent > 100000) throw ParseError("exponent overflow", e.line, e.column);
      base = ring_pow(ring_, base, exponent);
    }
    return base;
  }

  typename B::Element atom() {
    const Token t = lex_.next();
    switch (t.kind) {
      case Tok::minus:
        return ring_.neg(atom_with_power());
      case Tok::number: {
        std::string text = t.text;
        if (lex_.peek().kind == Tok::slash) {
          lex_.next();
          const Token den = lex_.next();
          if (den.kind != Tok::number)
            throw ParseError("expected denominator digits", den.line, den.column);
          text += "/" + den.text;
        }
        return embed(ring_, Rational::parse(text));
      }
      case Tok::ident: {
        if (auto e = ring_.symbol(t.text)) return *e;
        throw ParseError("unknown generator '" + t.text + "'", t.line, t.column);
      }
      case Tok::lparen: {
        typename B::Element inner = expr();
        const Token close = lex_.next();
        if (close.kind != Tok::rparen) throw ParseError("expected ')'", close.line, close.column);
        return inner;
      }
      default:
        throw ParseError("unexpected token '" + t.text + "'", t.line, t.column);
    }
  }

  // '-' binds looser than '^': -v1^2 is -(v1^2).
  typename B::Element atom_with_power() {
    typename B::Element base = atom();
    if (lex_.peek().kind == Tok::caret) {
      lex_.next();
      const Token e = lex_.next();
      if (e.kind != Tok::number) throw ParseError("expected integer exponent", e.line, e.column);
      if (e.text.size() > 6) throw ParseError("exponent overflow", e.line, e.column);
      base = ring_pow(ring_, base, static_cast<std::uint32_t>(std::stoul(e.text)));
    }
    return base;
  }

  const B& ring_;
  Lexer& lex_;
};

}  // namespace detail_parser

/// Evaluates an element expression over the backend. Grammar:
///   expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
///   factor := atom ('^' uint)?; atom := rational | symbol | '(' expr ')' | '-' atom.
/// Implicit multiplication is not accepted.
template <RingBackend B>
typename B::Element parse_element(const B& ring, std::string_view text) {
  detail_parser::Lexer lex(text);
  detail_parser::ElementParser<B> parser(ring, lex);
  typename B::Element out = parser.expr();
  const auto& t = lex.peek();
  if (t.kind != detail_parser::Tok::end)
    throw ParseError("trailing input '" + t.text + "'", t.line, t.column);
  return out;
}

/// Parses "[[e,...],[...]]" into an n x n matrix; rows may be separated by
/// ',' or ';'. Element errors carry the (row, column) cell position.
template <RingBackend B>
RingMatrix<typename B::Element> parse_matrix(const B& ring, std::string_view text, std::size_t n) {
  using detail_parser::Tok;
  detail_parser::Lexer lex(text);
  auto expect = [&](Tok k, const char* what) {
    const auto t = lex.next();
    if (t.kind != k) throw ParseError(std::string("expected ") + what, t.line, t.column);
    return t;
  };
  expect(Tok::lbracket, "'['");
  std::vector<std::vector<typename B::Element>> rows;
  while (true) {
    expect(Tok::lbracket, "'['");
    std::vector<typename B::Element> row;
    while (true) {
      detail_parser::ElementParser<B> parser(ring, lex);
      try {
        row.push_back(parser.expr());
      } catch (const ParseError& e) {
        throw ParseError("in cell (" + std::to_string(rows.size() + 1) + "," +
                             std::to_string(row.size() + 1) + "): " + e.what(),
                         e.line(), e.column());
      }
      const auto t = lex.next();
      if (t.kind == Tok::rbracket) break;
      if (t.kind != Tok::comma) throw ParseError("expected ',' or ']'", t.line, t.column);
    }
    rows.push_back(std::move(row));
    const auto t = lex.next();
    if (t.kind == Tok::rbracket) break;
    if (t.kind != Tok::comma && t.kind != Tok::semicolon)
      throw ParseError("expected ',' or ';' or ']'", t.line, t.column);
  }
  const auto& tail = lex.peek();
  if (tail.kind != Tok::end) throw ParseError("trailing input", tail.line, tail.column);

  if (rows.size() != n)
    throw ring_error("matrix: expected " + std::to_string(n) + " rows, got " +
                     std::to_string(rows.size()));
  std::vector<typename B::Element> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n)
      throw ring_error("matrix: row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
    for (auto& e : rows[i]) entries.push_back(std::move(e));
  }
  return RingMatrix<typename B::Element>(n, std::move(entries));
}

}  // namespace nilcayley
