#include "qsr/interpretation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qsr/error.hpp"
#include "qsr/network.hpp"
#include "text_lexer.hpp"

namespace qsr {

std::vector<std::pair<std::size_t, std::size_t>> PairSet::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto k = bits_.find_first(); k != boost::dynamic_bitset<>::npos; k = bits_.find_next(k))
    out.emplace_back(k / u_, k % u_);
  return out;
}

PairSet PairSet::converse() const {
  PairSet out(u_);
  for (auto [a, b] : pairs()) out.insert(b, a);
  return out;
}

PairSet PairSet::compose(const PairSet &o) const {
  PairSet out(u_);
  for (std::size_t a = 0; a < u_; ++a)
    for (std::size_t v = 0; v < u_; ++v) {
      if (!contains(a, v)) continue;
      for (std::size_t c = 0; c < u_; ++c)
        if (o.contains(v, c)) out.insert(a, c);
    }
  return out;
}

PairSet PairSet::identity(std::size_t universe) {
  PairSet out(universe);
  for (std::size_t a = 0; a < universe; ++a) out.insert(a, a);
  return out;
}

PairSet PairSet::all(std::size_t universe) {
  PairSet out(universe);
  out.bits_.set();
  return out;
}

FiniteInterpretation::FiniteInterpretation(std::shared_ptr<const CalculusSpec> calculus,
                                           std::vector<std::string> universe, std::string name)
    : calculus_(std::move(calculus)), name_(std::move(name)), universe_(std::move(universe)) {
  if (!calculus_) throw Error("model needs a calculus");
  if (universe_.empty()) throw Error("model universe is empty");
  phi_.assign(calculus_->size(), PairSet(universe_.size()));
}

PairSet FiniteInterpretation::phi(const RelationSet &r) const {
  PairSet out(universe_size());
  r.for_each([&](std::size_t s) { out |= phi_[s]; });
  return out;
}

std::vector<std::size_t> FiniteInterpretation::relations_between(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < phi_.size(); ++s)
    if (phi_[s].contains(a, b)) out.push_back(s);
  return out;
}

namespace {

using detail::Line;
using detail::Token;

std::size_t element(const FiniteInterpretation &m, const Line &line, const Token &tok) {
  const auto &u = m.universe();
  auto it = std::find(u.begin(), u.end(), tok.text);
  if (it == u.end()) throw ParseError("unknown universe element '" + tok.text + "'", line.number, tok.column);
  return static_cast<std::size_t>(it - u.begin());
}

} // namespace

std::optional<std::string> model_calculus_name(std::string_view text) {
  for (const Line &line : detail::lex(text))
    if (line.tokens.size() == 2 && line.tokens[0].text == "calculus") return line.tokens[1].text;
  return std::nullopt;
}

FiniteInterpretation parse_model(std::string_view text, std::shared_ptr<const CalculusSpec> calculus) {
  std::string name;
  std::optional<FiniteInterpretation> model;
  std::vector<bool> seen(calculus->size(), false);

  for (const Line &line : detail::lex(text)) {
    const Token &t0 = line.tokens.front();
    if (t0.kind == Token::Kind::word && t0.text == "model") {
      if (line.tokens.size() != 2) throw ParseError("expected: model <name>", line.number, t0.column);
      name = line.tokens[1].text;
      continue;
    }
    if (t0.kind == Token::Kind::word && t0.text == "calculus") {
      if (line.tokens.size() != 2) throw ParseError("expected: calculus <name>", line.number, t0.column);
      if (line.tokens[1].text != calculus->name())
        throw ParseError("model is over calculus '" + line.tokens[1].text + "', expected '" +
                             calculus->name() + "'",
                         line.number, line.tokens[1].column);
      continue;
    }
    if (t0.kind == Token::Kind::word && t0.text == "universe") {
      if (model) throw ParseError("duplicate 'universe' line", line.number, t0.column);
      std::vector<std::string> u;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        const auto &tok = line.tokens[i];
        if (tok.kind != Token::Kind::word) throw ParseError("expected element name", line.number, tok.column);
        if (std::find(u.begin(), u.end(), tok.text) != u.end())
          throw ParseError("duplicate element '" + tok.text + "'", line.number, tok.column);
        u.push_back(tok.text);
      }
      if (u.empty()) throw ParseError("empty universe", line.number, t0.column);
      model.emplace(calculus, std::move(u));
      continue;
    }

    // <sym>: (a,b)*   or   <sym> : (a,b)*
    if (!model) throw ParseError("'universe' must precede relation lines", line.number, t0.column);
    if (t0.kind != Token::Kind::word) throw ParseError("expected relation symbol", line.number, t0.column);
    std::string sym = t0.text;
    std::size_t pos = 1;
    if (sym.size() > 1 && sym.back() == ':') sym.pop_back();
    else if (pos < line.tokens.size() && line.tokens[pos].text == ":") ++pos;
    else throw ParseError("expected ':' after relation symbol", line.number, t0.column);
    const auto idx = calculus->index_of(sym);
    if (!idx) throw ParseError("unknown relation symbol '" + sym + "'", line.number, t0.column);
    if (seen[*idx]) throw ParseError("duplicate relation line '" + sym + "'", line.number, t0.column);
    seen[*idx] = true;
    while (pos < line.tokens.size()) {
      const std::size_t open = line.tokens[pos].column;
      auto group = detail::read_group(line, pos);
      if (group.size() != 2) throw ParseError("expected a pair (a,b)", line.number, open);
      model->phi(*idx).insert(element(*model, line, *group[0]), element(*model, line, *group[1]));
    }
  }
  if (!model) throw ParseError("missing 'universe' line");
  model->set_name(name);
  return std::move(*model);
}

FiniteInterpretation load_model_file(const std::string &path, std::shared_ptr<const CalculusSpec> calculus) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str(), std::move(calculus));
}

std::string serialize_model(const FiniteInterpretation &model) {
  std::ostringstream out;
  out << "model " << detail::quote(model.name()) << "\n";
  out << "calculus " << model.calculus().name() << "\n";
  out << "universe";
  for (const auto &e : model.universe()) out << " " << e;
  out << "\n";
  for (std::size_t s = 0; s < model.calculus().size(); ++s) {
    out << model.calculus().symbol(s) << ":";
    for (auto [a, b] : model.phi(s).pairs()) out << " (" << model.universe()[a] << "," << model.universe()[b] << ")";
    out << "\n";
  }
  return out.str();
}

bool satisfies(const ConstraintNetwork &net, const Valuation &valuation, const FiniteInterpretation &model) {
  if (net.calculus().id() != model.calculus().id()) throw CalculusMismatch();
  if (valuation.size() != net.size()) throw Error("valuation is not total over the network's variables");
  for (auto v : valuation)
    if (v >= model.universe_size()) throw Error("valuation maps outside the universe");
  for (std::size_t i = 0; i < net.size(); ++i)
    for (std::size_t j = 0; j < net.size(); ++j) {
      if (i == j) continue;
      const auto r = net.at(i, j);
      bool ok = false;
      r.for_each([&](std::size_t s) { ok = ok || model.phi(s).contains(valuation[i], valuation[j]); });
      if (!ok) return false;
    }
  return true;
}

} // namespace qsr
