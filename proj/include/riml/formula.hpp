#ifndef RIML_FORMULA_HPP
#define RIML_FORMULA_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "riml/common.hpp"

namespace riml {

// Both languages share the boolean basis {Var, Top, Neg, And}; the box
// language adds Box, the circle language adds Circ and Star. Derived
// connectives (false, |, ->, <->, dia, bullet) desugar at construction,
// so structural equality is equality up to those abbreviations.

enum class BoxOp : std::uint8_t { Var, Top, Neg, And, Box };
enum class RIOp : std::uint8_t { Var, Top, Neg, And, Circ, Star };

class BoxFormula {
public:
  static BoxFormula var(std::string name);
  static BoxFormula top();
  static BoxFormula bottom();  // ~true
  static BoxFormula neg(BoxFormula a);
  static BoxFormula conj(BoxFormula a, BoxFormula b);
  static BoxFormula disj(BoxFormula a, BoxFormula b);     // ~(~a & ~b)
  static BoxFormula implies(BoxFormula a, BoxFormula b);  // ~(a & ~b)
  static BoxFormula iff(BoxFormula a, BoxFormula b);
  static BoxFormula box(BoxFormula a);
  static BoxFormula dia(BoxFormula a);  // ~box ~a

  BoxOp op() const;
  const std::string& name() const;  // Var nodes only
  BoxFormula child() const;         // Neg/Box operand
  BoxFormula left() const;          // And operands
  BoxFormula right() const;

  bool operator==(const BoxFormula& o) const;
  bool operator!=(const BoxFormula& o) const { return !(*this == o); }

  int node_count() const;
  int modal_depth() const;
  std::set<std::string> variables() const;

private:
  struct Node;
  explicit BoxFormula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

class RIFormula {
public:
  static RIFormula var(std::string name);
  static RIFormula top();
  static RIFormula bottom();
  static RIFormula neg(RIFormula a);
  static RIFormula conj(RIFormula a, RIFormula b);
  static RIFormula disj(RIFormula a, RIFormula b);
  static RIFormula implies(RIFormula a, RIFormula b);
  static RIFormula iff(RIFormula a, RIFormula b);
  static RIFormula circ(RIFormula a);
  static RIFormula star(RIFormula a);
  static RIFormula bullet(RIFormula a);  // ~o a

  RIOp op() const;
  const std::string& name() const;
  RIFormula child() const;  // Neg/Circ/Star operand
  RIFormula left() const;
  RIFormula right() const;

  bool operator==(const RIFormula& o) const;
  bool operator!=(const RIFormula& o) const { return !(*this == o); }

  int node_count() const;
  int modal_depth() const;
  std::set<std::string> variables() const;

private:
  struct Node;
  explicit RIFormula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

/// Concrete syntax, shared by both languages.
///
///   formula  := iff
///   iff      := imp ('<->' imp)*            right associative
///   imp      := or ('->' or)*               right associative
///   or       := and ('|' and)*              left associative
///   and      := prefix ('&' prefix)*        left associative
///   prefix   := ('~'|'box'|'dia'|'o'|'bullet'|'star') prefix | primary
///   primary  := ident | 'true' | 'false' | '(' formula ')'
///   ident    := [a-z][a-z0-9_]*
///
/// parse_box rejects 'o', 'bullet' and 'star'; parse_ri rejects 'box'
/// and 'dia'. Throws SyntaxError.
BoxFormula parse_box(std::string_view text);
RIFormula parse_ri(std::string_view text);

struct PrintOptions {
  bool modal_sugar = false;  // print ~(o a) as "bullet a", ~(box ~a) as "dia a"
};

/// Deterministic rendering; parse(print(f)) is structurally f.
/// Boolean abbreviations are restored ("p | q", "p -> q", "false");
/// modal ones only under PrintOptions::modal_sugar.
std::string print_box(const BoxFormula& f, PrintOptions opts = {});
std::string print_ri(const RIFormula& f, PrintOptions opts = {});

/// True iff the text is usable as a variable: [a-z][a-z0-9_]* and not a
/// reserved word of the grammar.
bool valid_identifier(std::string_view text);

/// Simultaneous substitution at variable occurrences.
BoxFormula substitute(const BoxFormula& f,
                      const std::map<std::string, BoxFormula>& map);
RIFormula substitute(const RIFormula& f,
                     const std::map<std::string, RIFormula>& map);

/// Translation into the circle language:
///   p* = p, (~a)* = ~a*, (a & b)* = a* & b*, (box a)* = o a* & a*.
RIFormula circ_translate(const BoxFormula& f);

}  // namespace riml

#endif
