#include "lexer.hpp"

#include <cctype>

namespace bbgp::detail {

namespace {

bool is_symbol_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
  };

  auto read_delimited = [&](char delim, int l, int c) {
    std::string text;
    advance(1);
    while (true) {
      if (i >= src.size() || src[i] == '\n')
        throw ParseError(std::string("unterminated ") + (delim == '\'' ? "quoted literal" : "string"), l, c);
      char ch = src[i];
      if (ch == delim) {
        advance(1);
        break;
      }
      if (ch == '\\' && i + 1 < src.size()) {
        char esc = src[i + 1];
        text += esc == 'n' ? '\n' : esc;
        advance(2);
        continue;
      }
      text += ch;
      advance(1);
    }
    return text;
  };

  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line;
    const int k = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && is_symbol_char(src[j])) ++j;
      std::string word(src.substr(i, j - i));
      Tok kind = (std::isupper(static_cast<unsigned char>(c)) || c == '_') ? Tok::variable : Tok::identifier;
      out.push_back({kind, std::move(word), l, k});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      std::size_t j = i + 1;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && is_symbol_char(src[j])) throw ParseError("malformed number", l, k);
      out.push_back({Tok::number, std::string(src.substr(i, j - i)), l, k});
      advance(j - i);
      continue;
    }
    if (c == '\'') {
      std::string text = read_delimited('\'', l, k);
      out.push_back({Tok::quoted, std::move(text), l, k});
      continue;
    }
    if (c == '"') {
      std::string text = read_delimited('"', l, k);
      out.push_back({Tok::string, std::move(text), l, k});
      continue;
    }
    if (src.substr(i, 2) == "->") {
      out.push_back({Tok::strict_arrow, "->", l, k});
      advance(2);
      continue;
    }
    if (src.substr(i, 2) == "=>") {
      out.push_back({Tok::defeasible_arrow, "=>", l, k});
      advance(2);
      continue;
    }
    // U+00AC NOT SIGN
    if (src.substr(i, 2) == "\xC2\xAC") {
      out.push_back({Tok::tilde, "~", l, k});
      advance(2);
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case ',': kind = Tok::comma; break;
      case '.': kind = Tok::dot; break;
      case ':': kind = Tok::colon; break;
      case '~': kind = Tok::tilde; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", l, k);
    }
    out.push_back({kind, std::string(1, c), l, k});
    advance(1);
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

const Token& TokenStream::peek(std::size_t ahead) const {
  std::size_t at = pos_ + ahead;
  return at < tokens_.size() ? tokens_[at] : tokens_.back();
}

const Token& TokenStream::next() {
  const Token& t = peek();
  if (pos_ < tokens_.size() - 1) ++pos_;
  return t;
}

bool TokenStream::accept(Tok kind) {
  if (peek().kind != kind) return false;
  next();
  return true;
}

const Token& TokenStream::expect(Tok kind, std::string_view what) {
  if (peek().kind != kind) {
    const Token& t = peek();
    fail(t, "expected " + std::string(what) + (t.kind == Tok::end ? " at end of input" : ", found '" + t.text + "'"));
  }
  return next();
}

void TokenStream::fail(const Token& at, const std::string& message) const {
  throw ParseError(message, at.line, at.column);
}

Term TokenStream::read_term() {
  const Token& t = next();
  switch (t.kind) {
    case Tok::variable:
      return Term::variable(t.text);
    case Tok::number:
      return Term::number(t.text);
    case Tok::identifier: {
      if (!accept(Tok::lparen)) return Term::constant(t.text);
      std::vector<Term> args;
      if (peek().kind != Tok::rparen) {
        do args.push_back(read_term());
        while (accept(Tok::comma));
      }
      expect(Tok::rparen, "')'");
      return Term::compound(t.text, std::move(args));
    }
    case Tok::quoted: {
      // Quoted text that reads as a literal is a reified goal; anything else is
      // an opaque string constant.
      try {
        return quote(parse_literal(t.text));
      } catch (const ParseError&) {
        return Term::string(t.text);
      }
    }
    default:
      fail(t, "expected a term, found '" + t.text + "'");
  }
}

Literal TokenStream::read_literal() {
  bool negated = false;
  while (accept(Tok::tilde)) negated = !negated;
  const Token& name = peek();
  if (name.kind == Tok::variable) fail(name, "predicate names must start lowercase: '" + name.text + "'");
  expect(Tok::identifier, "a predicate name");
  std::vector<Term> args;
  if (accept(Tok::lparen)) {
    if (peek().kind != Tok::rparen) {
      do args.push_back(read_term());
      while (accept(Tok::comma));
    }
    expect(Tok::rparen, "')'");
  }
  return Literal(name.text, std::move(args), negated);
}

}  // namespace bbgp::detail
