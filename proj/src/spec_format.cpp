#include <fstream>
#include <optional>
#include <sstream>

#include "qsr/analyzer.hpp"
#include "qsr/error.hpp"
#include "qsr/registry.hpp"
#include "text_lexer.hpp"

namespace qsr {

namespace {

using detail::Line;
using detail::Token;

bool has_paren(const Line &line) {
  for (const auto &t : line.tokens)
    if (t.kind == Token::Kind::lparen || t.kind == Token::Kind::rparen) return true;
  return false;
}

bool is_keyword_line(const Line &line, std::string_view keyword) {
  const auto &t0 = line.tokens.front();
  return t0.kind == Token::Kind::word && t0.text == keyword && !has_paren(line);
}

struct SpecBuilder {
  std::optional<std::string> name;
  std::optional<std::vector<std::string>> symbols;
  std::optional<std::vector<std::string>> identity;
  std::vector<std::optional<std::vector<std::string>>> converse;
  std::vector<std::optional<std::vector<std::string>>> composition;
  std::optional<Tri> ra7, ra9, acl;
  std::unordered_map<std::string, std::size_t> index;

  std::size_t symbol_index(const Line &line, const Token &tok) const {
    auto it = index.find(tok.text);
    if (it == index.end())
      throw ParseError("unknown relation symbol '" + tok.text + "'", line.number, tok.column);
    return it->second;
  }

  std::vector<std::string> read_cell(const Line &line, std::size_t &pos) const {
    std::vector<std::string> out;
    for (const Token *t : detail::read_group(line, pos)) {
      symbol_index(line, *t);
      out.push_back(t->text);
    }
    return out;
  }

  void require_symbols(const Line &line) const {
    if (!symbols) throw ParseError("'relations' must precede table rows", line.number, 1);
  }

  static void expect_end(const Line &line, std::size_t pos) {
    if (pos != line.tokens.size())
      throw ParseError("unexpected token '" + line.tokens[pos].text + "'", line.number,
                       line.tokens[pos].column);
  }
};

} // namespace

CalculusSpec parse_spec(std::string_view text) {
  enum class Section { header, converse, composition };
  Section section = Section::header;
  SpecBuilder b;

  for (const Line &line : detail::lex(text)) {
    const Token &t0 = line.tokens.front();
    if (line.tokens.size() == 1 && t0.kind == Token::Kind::word &&
        (t0.text == "converse" || t0.text == "composition")) {
      b.require_symbols(line);
      section = t0.text == "converse" ? Section::converse : Section::composition;
      continue;
    }
    if (is_keyword_line(line, "calculus")) {
      if (line.tokens.size() != 2)
        throw ParseError("expected: calculus <name>", line.number, t0.column);
      if (b.name) throw ParseError("duplicate 'calculus' line", line.number, t0.column);
      b.name = line.tokens[1].text;
      continue;
    }
    if (is_keyword_line(line, "relations")) {
      if (b.symbols) throw ParseError("duplicate 'relations' line", line.number, t0.column);
      std::vector<std::string> syms;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        const auto &tok = line.tokens[i];
        if (tok.kind != Token::Kind::word)
          throw ParseError("expected relation symbol", line.number, tok.column);
        if (!b.index.emplace(tok.text, syms.size()).second)
          throw ParseError("duplicate relation symbol '" + tok.text + "'", line.number,
                           tok.column);
        syms.push_back(tok.text);
      }
      if (syms.empty()) throw ParseError("no relation symbols declared", line.number, t0.column);
      b.symbols = std::move(syms);
      b.converse.assign(b.symbols->size(), std::nullopt);
      b.composition.assign(b.symbols->size() * b.symbols->size(), std::nullopt);
      continue;
    }
    if (is_keyword_line(line, "identity")) {
      b.require_symbols(line);
      if (b.identity) throw ParseError("duplicate 'identity' line", line.number, t0.column);
      std::vector<std::string> id;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        b.symbol_index(line, line.tokens[i]);
        id.push_back(line.tokens[i].text);
      }
      b.identity = std::move(id);
      continue;
    }
    if (is_keyword_line(line, "flags")) {
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        const auto &tok = line.tokens[i];
        const auto eq = tok.text.find('=');
        std::optional<Tri> value;
        if (eq != std::string::npos) value = parse_tri(std::string_view(tok.text).substr(eq + 1));
        if (!value)
          throw ParseError("expected flag=yes|no|unknown", line.number, tok.column);
        const std::string key = tok.text.substr(0, eq);
        if (key == "ra7") b.ra7 = value;
        else if (key == "ra9") b.ra9 = value;
        else if (key == "acl") b.acl = value;
        else throw ParseError("unknown flag '" + key + "'", line.number, tok.column);
      }
      continue;
    }

    if (section == Section::converse) {
      if (t0.kind != Token::Kind::word)
        throw ParseError("expected relation symbol", line.number, t0.column);
      const std::size_t r = b.symbol_index(line, t0);
      std::size_t pos = 1;
      auto cell = b.read_cell(line, pos);
      SpecBuilder::expect_end(line, pos);
      if (b.converse[r])
        throw ParseError("duplicate converse row '" + t0.text + "'", line.number, t0.column);
      b.converse[r] = std::move(cell);
      continue;
    }
    if (section == Section::composition) {
      if (line.tokens.size() < 2 || t0.kind != Token::Kind::word ||
          line.tokens[1].kind != Token::Kind::word)
        throw ParseError("expected: <sym> <sym> (<sym>*)", line.number, t0.column);
      const std::size_t r = b.symbol_index(line, t0);
      const std::size_t s = b.symbol_index(line, line.tokens[1]);
      std::size_t pos = 2;
      auto cell = b.read_cell(line, pos);
      SpecBuilder::expect_end(line, pos);
      auto &slot = b.composition[r * b.symbols->size() + s];
      if (slot)
        throw ParseError("duplicate composition cell '" + t0.text + " " + line.tokens[1].text + "'",
                         line.number, t0.column);
      slot = std::move(cell);
      continue;
    }
    throw ParseError("unexpected line starting with '" + t0.text + "'", line.number, t0.column);
  }

  if (!b.name) throw ParseError("missing 'calculus' line");
  if (!b.symbols) throw ParseError("missing 'relations' line");
  const auto &syms = *b.symbols;
  for (std::size_t r = 0; r < syms.size(); ++r)
    if (!b.converse[r]) throw ParseError("converse table not total: missing " + syms[r]);
  for (std::size_t r = 0; r < syms.size(); ++r)
    for (std::size_t s = 0; s < syms.size(); ++s)
      if (!b.composition[r * syms.size() + s])
        throw ParseError("composition table not total: missing " + syms[r] + " " + syms[s]);

  CalculusSpec spec(*b.name, syms);
  if (b.identity && !b.identity->empty()) spec.set_identity(spec.relation(*b.identity));
  for (std::size_t r = 0; r < syms.size(); ++r) {
    spec.set_converse(r, spec.relation(*b.converse[r]));
    for (std::size_t s = 0; s < syms.size(); ++s)
      spec.set_composition(r, s, spec.relation(*b.composition[r * syms.size() + s]));
  }

  const bool need_ra7 = !b.ra7 || *b.ra7 == Tri::unknown;
  const bool need_ra9 = !b.ra9 || *b.ra9 == Tri::unknown;
  if (need_ra7 || need_ra9) compute_flags(spec);
  if (!need_ra7) spec.flags().ra7_holds = *b.ra7;
  if (!need_ra9) spec.flags().ra9_holds = *b.ra9;
  if (b.acl) spec.flags().acl_decides_atomic = *b.acl;
  return spec;
}

CalculusSpec load_spec_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open calculus file '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

std::string serialize_spec(const CalculusSpec &spec) {
  std::ostringstream out;
  auto group = [&](const RelationSet &r) {
    out << "(";
    bool first = true;
    for (const auto &n : spec.names(r)) {
      out << (first ? "" : " ") << n;
      first = false;
    }
    out << ")";
  };

  out << "calculus " << detail::quote(spec.name()) << "\n";
  out << "relations";
  for (const auto &s : spec.symbols()) out << " " << s;
  out << "\nidentity";
  if (spec.identity())
    for (const auto &n : spec.names(*spec.identity())) out << " " << n;
  out << "\n";

  const auto &f = spec.flags();
  std::string flags;
  if (f.ra7_holds != Tri::unknown) flags += " ra7=" + std::string(to_string(f.ra7_holds));
  if (f.ra9_holds != Tri::unknown) flags += " ra9=" + std::string(to_string(f.ra9_holds));
  if (f.acl_decides_atomic != Tri::unknown)
    flags += " acl=" + std::string(to_string(f.acl_decides_atomic));
  if (!flags.empty()) out << "flags" << flags << "\n";

  out << "converse\n";
  for (std::size_t r = 0; r < spec.size(); ++r) {
    out << spec.symbol(r) << " ";
    group(spec.converse_of(r));
    out << "\n";
  }
  out << "composition\n";
  for (std::size_t r = 0; r < spec.size(); ++r)
    for (std::size_t s = 0; s < spec.size(); ++s) {
      out << spec.symbol(r) << " " << spec.symbol(s) << " ";
      group(spec.composition_of(r, s));
      out << "\n";
    }
  return out.str();
}

} // namespace qsr
