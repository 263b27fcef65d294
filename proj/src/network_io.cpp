#include <algorithm>
#include <fstream>
#include <sstream>

#include "qsr/error.hpp"
#include "qsr/network.hpp"
#include "text_lexer.hpp"

namespace qsr {

namespace {

using detail::Line;
using detail::Token;

std::string word_or_quoted(const Line &line, std::size_t pos, std::string_view what) {
  if (line.tokens.size() != pos + 1 ||
      (line.tokens[pos].kind != Token::Kind::word && line.tokens[pos].kind != Token::Kind::quoted))
    throw ParseError("expected: " + std::string(what), line.number, line.tokens.front().column);
  return line.tokens[pos].text;
}

} // namespace

std::optional<std::string> network_calculus_name(std::string_view text) {
  for (const Line &line : detail::lex(text))
    if (line.tokens.size() == 2 && line.tokens[0].kind == Token::Kind::word &&
        line.tokens[0].text == "calculus")
      return line.tokens[1].text;
  return std::nullopt;
}

ConstraintNetwork parse_network(std::string_view text, std::shared_ptr<const CalculusSpec> calculus) {
  std::string name;
  std::optional<std::string> calc_name;
  std::optional<std::vector<std::string>> vars;
  std::vector<Edge> edges;

  for (const Line &line : detail::lex(text)) {
    const Token &t0 = line.tokens.front();
    const bool keyword = t0.kind == Token::Kind::word && line.tokens.size() >= 2 &&
                         line.tokens[1].kind != Token::Kind::lparen;
    if (keyword && t0.text == "network") {
      name = word_or_quoted(line, 1, "network <name>");
      continue;
    }
    if (keyword && t0.text == "calculus") {
      calc_name = word_or_quoted(line, 1, "calculus <name>");
      if (*calc_name != calculus->name())
        throw ParseError("network is over calculus '" + *calc_name + "', expected '" +
                             calculus->name() + "'",
                         line.number, line.tokens[1].column);
      continue;
    }
    if (keyword && t0.text == "vars") {
      if (vars) throw ParseError("duplicate 'vars' line", line.number, t0.column);
      std::vector<std::string> v;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        const auto &tok = line.tokens[i];
        if (tok.kind != Token::Kind::word) throw ParseError("expected variable name", line.number, tok.column);
        if (std::find(v.begin(), v.end(), tok.text) != v.end())
          throw ParseError("duplicate variable '" + tok.text + "'", line.number, tok.column);
        v.push_back(tok.text);
      }
      vars = std::move(v);
      continue;
    }

    if (t0.kind != Token::Kind::word) throw ParseError("expected variable name", line.number, t0.column);
    std::size_t pos = 1;
    std::vector<std::string> syms;
    for (const Token *t : detail::read_group(line, pos)) {
      if (!calculus->index_of(t->text))
        throw ParseError("unknown relation symbol '" + t->text + "'", line.number, t->column);
      syms.push_back(t->text);
    }
    if (pos + 1 != line.tokens.size() || line.tokens[pos].kind != Token::Kind::word)
      throw ParseError("expected: <var> (<sym>+) <var>", line.number, t0.column);
    const auto &to = line.tokens[pos];
    if (vars) {
      for (const auto *tok : {&t0, &to})
        if (std::find(vars->begin(), vars->end(), tok->text) == vars->end())
          throw ParseError("undeclared variable '" + tok->text + "'", line.number, tok->column);
    }
    if (t0.text == to.text)
      throw ParseError("constraint relates '" + t0.text + "' to itself", line.number, t0.column);
    edges.push_back({t0.text, calculus->relation(syms), to.text});
  }

  ConstraintNetwork net = normalize(std::move(calculus), edges, vars);
  net.set_name(name);
  return net;
}

ConstraintNetwork load_network_file(const std::string &path, std::shared_ptr<const CalculusSpec> calculus) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open network file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_network(ss.str(), std::move(calculus));
}

std::string serialize_network(const ConstraintNetwork &net) {
  const auto &c = net.calculus();
  std::ostringstream out;
  out << "network " << detail::quote(net.name()) << "\n";
  out << "calculus " << c.name() << "\n";
  out << "vars";
  for (const auto &v : net.vars()) out << " " << v;
  out << "\n";
  for (const auto &e : edges(net)) {
    out << e.from << " (";
    const auto names = c.names(e.rel);
    for (std::size_t i = 0; i < names.size(); ++i) out << (i ? " " : "") << names[i];
    out << ") " << e.to << "\n";
  }
  return out.str();
}

nlohmann::json to_json(const ConstraintNetwork &net) {
  nlohmann::json matrix = nlohmann::json::array();
  for (std::size_t i = 0; i < net.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < net.size(); ++j) row.push_back(net.calculus().names(net.at(i, j)));
    matrix.push_back(std::move(row));
  }
  return {{"name", net.name()}, {"calculus", net.calculus().name()}, {"vars", net.vars()}, {"matrix", matrix}};
}

ConstraintNetwork network_from_json(const nlohmann::json &j, std::shared_ptr<const CalculusSpec> calculus) {
  if (j.at("calculus").get<std::string>() != calculus->name())
    throw Error("network JSON is over a different calculus");
  ConstraintNetwork net(calculus, j.at("vars").get<std::vector<std::string>>(), j.value("name", ""));
  const auto &m = j.at("matrix");
  if (m.size() != net.size()) throw Error("matrix size does not match variable count");
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (m[i].size() != net.size()) throw Error("matrix row size does not match variable count");
    for (std::size_t k = 0; k < net.size(); ++k)
      net.cell(i, k) = calculus->relation(m[i][k].get<std::vector<std::string>>());
  }
  return net;
}

} // namespace qsr
