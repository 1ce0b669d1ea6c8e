// Tokenizer and term/literal reader shared by the theory and query parsers.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bbgp/errors.hpp"
#include "bbgp/literal.hpp"

namespace bbgp::detail {

enum class Tok {
  identifier,  // lowercase-initial symbol
  variable,    // uppercase- or underscore-initial symbol
  number,
  quoted,      // '...' (raw content, escapes resolved)
  string,      // "..." (escapes resolved)
  lparen,
  rparen,
  comma,
  dot,
  colon,
  tilde,
  strict_arrow,      // ->
  defeasible_arrow,  // =>
  end,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

/// Splits `source` into tokens. `#` starts a comment running to end of line.
std::vector<Token> tokenize(std::string_view source);

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool accept(Tok kind);
  const Token& expect(Tok kind, std::string_view what);
  bool at_end() const { return peek().kind == Tok::end; }

  [[noreturn]] void fail(const Token& at, const std::string& message) const;

  Term read_term();
  Literal read_literal();

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace bbgp::detail
