#pragma once

// Tokenizer shared by the calculus, network and model text formats. Lines are
// split into words, quoted strings and parentheses; '#' starts a comment and
// commas are plain separators.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qsr/error.hpp"

namespace qsr::detail {

struct Token {
  enum class Kind { word, quoted, lparen, rparen };
  Kind kind;
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

inline std::vector<Line> lex(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      const char c = raw[i];
      if (c == '#') break;
      if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
        ++i;
        continue;
      }
      if (c == '(' || c == ')') {
        line.tokens.push_back({c == '(' ? Token::Kind::lparen : Token::Kind::rparen,
                               std::string(1, c), i + 1});
        ++i;
        continue;
      }
      if (c == '"') {
        std::size_t close = raw.find('"', i + 1);
        if (close == std::string_view::npos)
          throw ParseError("unterminated quoted string", number, i + 1);
        line.tokens.push_back(
            {Token::Kind::quoted, std::string(raw.substr(i + 1, close - i - 1)), i + 1});
        i = close + 1;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r' &&
             raw[j] != ',' && raw[j] != '(' && raw[j] != ')' && raw[j] != '"' && raw[j] != '#')
        ++j;
      line.tokens.push_back({Token::Kind::word, std::string(raw.substr(i, j - i)), i + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

// Reads "( word* )" starting at tokens[pos]; advances pos past ')'.
inline std::vector<const Token *> read_group(const Line &line, std::size_t &pos) {
  if (pos >= line.tokens.size() || line.tokens[pos].kind != Token::Kind::lparen) {
    const std::size_t col = pos < line.tokens.size() ? line.tokens[pos].column : 0;
    throw ParseError("expected '('", line.number, col);
  }
  const std::size_t open_col = line.tokens[pos].column;
  ++pos;
  std::vector<const Token *> out;
  while (pos < line.tokens.size() && line.tokens[pos].kind == Token::Kind::word)
    out.push_back(&line.tokens[pos++]);
  if (pos >= line.tokens.size() || line.tokens[pos].kind != Token::Kind::rparen)
    throw ParseError("unclosed '('", line.number, open_col);
  ++pos;
  return out;
}

inline std::string quote(const std::string &s) { return "\"" + s + "\""; }

} // namespace qsr::detail
