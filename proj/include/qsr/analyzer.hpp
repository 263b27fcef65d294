#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsr/calculus.hpp"

namespace qsr {

/// The relation-algebra axiom battery together with the weakenings used to
/// place calculi below full relation algebras.
///
///   R1  r ∪ s = s ∪ r                       R7  r˘˘ = r
///   R2  r ∪ (s ∪ t) = (r ∪ s) ∪ t           R8  (r ∪ s)˘ = r˘ ∪ s˘
///   R3  Huntington                          R9  (r ⋄ s)˘ = s˘ ⋄ r˘
///   R4  (r ⋄ s) ⋄ t = r ⋄ (s ⋄ t)           R10 r˘ ⋄ ¬(r ⋄ s) ∪ ¬s = ¬s
///   R5  (r ∪ s) ⋄ t = r ⋄ t ∪ s ⋄ t         WA  ((r ∩ id) ⋄ 1) ⋄ 1 = (r ∩ id) ⋄ 1
///   R6  r ⋄ id = r                          SA  (r ⋄ 1) ⋄ 1 = r ⋄ 1
///   R6l id ⋄ r = r                          PL  (r ⋄ s) ∩ t˘ = ∅ ⇔ (s ⋄ t) ∩ r˘ = ∅
///
/// Every equation is split into its two inclusions: the "sub" side checks
/// lhs ⊆ rhs and the "sup" side lhs ⊇ rhs, with lhs and rhs as written above.
/// For PL the "right" side is the forward implication and "left" the backward
/// one.
enum class Axiom { R1, R2, R3, R4, R5, R6, R6l, R7, R8, R9, R10, WA, SA, PL };

const std::vector<Axiom> &all_axioms();
std::string_view to_string(Axiom a);
std::optional<Axiom> parse_axiom(std::string_view s);
std::size_t arity(Axiom a);
bool needs_identity(Axiom a);

struct Counterexample {
  std::vector<std::vector<std::string>> args;
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
};

struct SideResult {
  std::string id; // e.g. "R4sub", "PLright"
  std::size_t violations = 0;
  std::vector<Counterexample> examples;

  bool holds() const noexcept { return violations == 0; }
};

struct AxiomRecord {
  Axiom axiom = Axiom::R1;
  bool applicable = true;
  std::size_t universe = 0;   // tuples tested
  std::size_t violations = 0; // tuples violating at least one side
  SideResult sub;
  SideResult sup;

  bool holds() const noexcept { return applicable && sub.holds() && sup.holds(); }
  double percentage() const noexcept {
    return universe == 0 ? 0.0 : 100.0 * static_cast<double>(violations) / static_cast<double>(universe);
  }
};

enum class Classification { RA, RA_minus_id, SA, WA, NA_or_weaker };
std::string_view to_string(Classification c);
std::optional<Classification> parse_classification(std::string_view s);

struct AxiomReport {
  std::string calculus;
  std::size_t relations = 0;
  std::vector<AxiomRecord> records;
  Classification classification = Classification::NA_or_weaker;
  Tri ra7_holds = Tri::unknown;
  Tri ra9_holds = Tri::unknown;

  const AxiomRecord &record(Axiom a) const;
  bool holds(Axiom a) const { return record(a).holds(); }
  // Ids of every violated side, in battery order.
  std::vector<std::string> violated_sides() const;
  bool all_hold() const;
};

struct AnalyzeOptions {
  enum class Domain {
    base,                 // all tuples of base relations
    composite_exhaustive, // all tuples of composite relations (small calculi)
    composite_sampled,    // random composite tuples
  };
  Domain domain = Domain::base;
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::size_t max_examples = 10;
  // Upper bound on tuples for composite_exhaustive; larger requests throw.
  std::size_t exhaustive_limit = std::size_t{1} << 24;
};

/// Evaluate one axiom over every tuple of the configured domain. Axioms that
/// mention id are reported with applicable = false when the calculus has no
/// designated identity.
AxiomRecord check_axiom(const CalculusSpec &spec, Axiom axiom, const AnalyzeOptions &opts = {});

/// Run the full battery and place the calculus in the algebra hierarchy:
/// RA ⊂ SA ⊂ WA, plus "RA minus id law" for calculi failing only R6.
AxiomReport classify(const CalculusSpec &spec, const AnalyzeOptions &opts = {});

/// Set ra7_holds / ra9_holds from base-relation checks.
void compute_flags(CalculusSpec &spec);

struct R6Equivalence {
  bool applicable = false; // needs id, R7 and R9
  bool r6 = false;
  bool r6l = false;

  bool agree() const noexcept { return r6 == r6l; }
};

/// Given R7 and R9, R6 holds iff R6l holds.
R6Equivalence r6_r6l_equivalence_check(const CalculusSpec &spec);

} // namespace qsr
