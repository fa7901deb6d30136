#ifndef RIML_PROOF_HPP
#define RIML_PROOF_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "riml/common.hpp"
#include "riml/formula.hpp"
#include "riml/json_io.hpp"

namespace riml {

/// Axiom schema over the circle language. Every variable of the pattern
/// is a metavariable; instances arise by uniform substitution.
struct Schema {
  std::string name;
  RIFormula pattern;
};

/// The three base schemata: b0 = o true, b1 = bullet p -> p,
/// b2 = (o p & o q) -> o (p & q).
const std::vector<Schema>& base_schemata();

/// True when f is a substitution instance of a propositional tautology:
/// variables and maximal o/star subformulas count as atoms, true is the
/// constant. AtomBudgetExceeded past max_atoms distinct atoms.
bool taut_check(const RIFormula& f, int max_atoms = kDefaultMaxTautAtoms);

/// The unique metavariable instantiation making the pattern equal f, if
/// one exists.
std::optional<std::map<std::string, RIFormula>> match_schema(
    const RIFormula& f, const Schema& s);

/// From a premise of implication shape a -> b, the conclusion of the
/// circle necessitation rule: (o a & a) -> (o b & b). ShapeError
/// otherwise.
RIFormula apply_bn(const RIFormula& premise);

/// Base schemata plus extra schemata (typically circle translations of
/// box axioms).
struct AxiomSystem {
  std::vector<Schema> extras;
};

/// circ_translate each axiom and use it schematically: every variable of
/// the source axiom becomes a metavariable.
AxiomSystem translate_axiomatization(const std::vector<BoxFormula>& axioms);

struct Justification {
  enum class Kind { Taut, Axiom, Extra, MP, US, BN };

  static Justification taut();
  static Justification axiom(std::string name);
  static Justification extra(int index);
  /// implication_line must read "antecedent -> this line",
  /// antecedent_line must hold the antecedent.
  static Justification mp(int implication_line, int antecedent_line);
  static Justification us(int from, std::map<std::string, RIFormula> sub);
  static Justification bn(int from);

  Kind kind = Kind::Taut;
  std::string axiom_name;                 // Axiom
  int extra_index = -1;                   // Extra
  int from1 = -1;                         // MP implication / US / BN source
  int from2 = -1;                         // MP antecedent
  std::map<std::string, RIFormula> sub;   // US
};

struct ProofLine {
  RIFormula formula;
  Justification just;
};

struct Proof {
  std::vector<ProofLine> lines;
};

/// ok(theorem = last line) or the first failing line (1-based) with a
/// reason naming the rule.
struct CheckResult {
  bool ok = false;
  std::optional<RIFormula> theorem;
  int error_line = 0;
  std::string reason;
};

CheckResult check_proof(const Proof& p, const AxiomSystem& sys);

/// Appends the derivation of (o a -> o b) from an earlier line holding
/// a <-> b (20 lines: the circle congruence argument). Returns the
/// 1-based index of the final line.
int append_circ_mono(Proof& p, int iff_line, const RIFormula& a,
                     const RIFormula& b);

/// Extends a proof of t (its last line) into a proof of o t. Returns the
/// new final line index.
int derive_circ(Proof& p);

/// Proof file: {"system": {"extras": ["..."]},
///              "lines": [{"formula": "...",
///                         "just": {"kind": "mp", "from": [2, 1]}}, ...]}
/// with kinds taut, axiom (name), extra (index), mp (from: [implication,
/// antecedent]), us (from: [line], sub), bn (from: [line]).
struct ProofDocument {
  AxiomSystem system;
  Proof proof;
};

ProofDocument proof_from_json(const Json& doc);
Json proof_to_json(const ProofDocument& doc);
Json check_result_to_json(const CheckResult& r);

}  // namespace riml

#endif
