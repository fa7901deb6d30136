#include "riml/formula.hpp"

#include <cassert>
#include <functional>
#include <sstream>

namespace riml {

// ---------- AST nodes ----------

struct BoxFormula::Node {
  BoxOp op;
  std::string name;  // Var
  std::shared_ptr<const Node> a, b;
};

struct RIFormula::Node {
  RIOp op;
  std::string name;
  std::shared_ptr<const Node> a, b;
};

namespace {

template <class Node, class Op>
std::shared_ptr<const Node> mk(Op op, std::string name,
                               std::shared_ptr<const Node> a = nullptr,
                               std::shared_ptr<const Node> b = nullptr) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->name = std::move(name);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

template <class Node>
bool node_eq(const Node* x, const Node* y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->op != y->op || x->name != y->name) return false;
  return node_eq(x->a.get(), y->a.get()) && node_eq(x->b.get(), y->b.get());
}

}  // namespace

// ---------- BoxFormula ----------

BoxFormula BoxFormula::var(std::string name) {
  return BoxFormula(mk<Node>(BoxOp::Var, std::move(name)));
}
BoxFormula BoxFormula::top() { return BoxFormula(mk<Node>(BoxOp::Top, "")); }
BoxFormula BoxFormula::bottom() { return neg(top()); }
BoxFormula BoxFormula::neg(BoxFormula a) {
  return BoxFormula(mk<Node>(BoxOp::Neg, "", std::move(a.n_)));
}
BoxFormula BoxFormula::conj(BoxFormula a, BoxFormula b) {
  return BoxFormula(mk<Node>(BoxOp::And, "", std::move(a.n_), std::move(b.n_)));
}
BoxFormula BoxFormula::disj(BoxFormula a, BoxFormula b) {
  return neg(conj(neg(std::move(a)), neg(std::move(b))));
}
BoxFormula BoxFormula::implies(BoxFormula a, BoxFormula b) {
  return neg(conj(std::move(a), neg(std::move(b))));
}
BoxFormula BoxFormula::iff(BoxFormula a, BoxFormula b) {
  return conj(implies(a, b), implies(b, a));
}
BoxFormula BoxFormula::box(BoxFormula a) {
  return BoxFormula(mk<Node>(BoxOp::Box, "", std::move(a.n_)));
}
BoxFormula BoxFormula::dia(BoxFormula a) { return neg(box(neg(std::move(a)))); }

BoxOp BoxFormula::op() const { return n_->op; }
const std::string& BoxFormula::name() const {
  assert(n_->op == BoxOp::Var);
  return n_->name;
}
BoxFormula BoxFormula::child() const {
  assert(n_->op == BoxOp::Neg || n_->op == BoxOp::Box);
  return BoxFormula(n_->a);
}
BoxFormula BoxFormula::left() const {
  assert(n_->op == BoxOp::And);
  return BoxFormula(n_->a);
}
BoxFormula BoxFormula::right() const {
  assert(n_->op == BoxOp::And);
  return BoxFormula(n_->b);
}
bool BoxFormula::operator==(const BoxFormula& o) const {
  return node_eq(n_.get(), o.n_.get());
}

// ---------- RIFormula ----------

RIFormula RIFormula::var(std::string name) {
  return RIFormula(mk<Node>(RIOp::Var, std::move(name)));
}
RIFormula RIFormula::top() { return RIFormula(mk<Node>(RIOp::Top, "")); }
RIFormula RIFormula::bottom() { return neg(top()); }
RIFormula RIFormula::neg(RIFormula a) {
  return RIFormula(mk<Node>(RIOp::Neg, "", std::move(a.n_)));
}
RIFormula RIFormula::conj(RIFormula a, RIFormula b) {
  return RIFormula(mk<Node>(RIOp::And, "", std::move(a.n_), std::move(b.n_)));
}
RIFormula RIFormula::disj(RIFormula a, RIFormula b) {
  return neg(conj(neg(std::move(a)), neg(std::move(b))));
}
RIFormula RIFormula::implies(RIFormula a, RIFormula b) {
  return neg(conj(std::move(a), neg(std::move(b))));
}
RIFormula RIFormula::iff(RIFormula a, RIFormula b) {
  return conj(implies(a, b), implies(b, a));
}
RIFormula RIFormula::circ(RIFormula a) {
  return RIFormula(mk<Node>(RIOp::Circ, "", std::move(a.n_)));
}
RIFormula RIFormula::star(RIFormula a) {
  return RIFormula(mk<Node>(RIOp::Star, "", std::move(a.n_)));
}
RIFormula RIFormula::bullet(RIFormula a) { return neg(circ(std::move(a))); }

RIOp RIFormula::op() const { return n_->op; }
const std::string& RIFormula::name() const {
  assert(n_->op == RIOp::Var);
  return n_->name;
}
RIFormula RIFormula::child() const {
  assert(n_->op == RIOp::Neg || n_->op == RIOp::Circ || n_->op == RIOp::Star);
  return RIFormula(n_->a);
}
RIFormula RIFormula::left() const {
  assert(n_->op == RIOp::And);
  return RIFormula(n_->a);
}
RIFormula RIFormula::right() const {
  assert(n_->op == RIOp::And);
  return RIFormula(n_->b);
}
bool RIFormula::operator==(const RIFormula& o) const {
  return node_eq(n_.get(), o.n_.get());
}

// ---------- measurements ----------

namespace {

template <class F>
int count_nodes(const F& f) {
  switch (f.op()) {
    case decltype(f.op())::Var:
    case decltype(f.op())::Top:
      return 1;
    case decltype(f.op())::And:
      return 1 + count_nodes(f.left()) + count_nodes(f.right());
    default:
      return 1 + count_nodes(f.child());
  }
}

int depth_of(const BoxFormula& f) {
  switch (f.op()) {
    case BoxOp::Var:
    case BoxOp::Top:
      return 0;
    case BoxOp::Neg:
      return depth_of(f.child());
    case BoxOp::And:
      return std::max(depth_of(f.left()), depth_of(f.right()));
    case BoxOp::Box:
      return 1 + depth_of(f.child());
  }
  return 0;
}

int depth_of(const RIFormula& f) {
  switch (f.op()) {
    case RIOp::Var:
    case RIOp::Top:
      return 0;
    case RIOp::Neg:
      return depth_of(f.child());
    case RIOp::And:
      return std::max(depth_of(f.left()), depth_of(f.right()));
    case RIOp::Circ:
    case RIOp::Star:
      return 1 + depth_of(f.child());
  }
  return 0;
}

template <class F>
void collect_vars(const F& f, std::set<std::string>& out) {
  switch (f.op()) {
    case decltype(f.op())::Var:
      out.insert(f.name());
      return;
    case decltype(f.op())::Top:
      return;
    case decltype(f.op())::And:
      collect_vars(f.left(), out);
      collect_vars(f.right(), out);
      return;
    default:
      collect_vars(f.child(), out);
      return;
  }
}

}  // namespace

int BoxFormula::node_count() const { return count_nodes(*this); }
int BoxFormula::modal_depth() const { return depth_of(*this); }
std::set<std::string> BoxFormula::variables() const {
  std::set<std::string> out;
  collect_vars(*this, out);
  return out;
}

int RIFormula::node_count() const { return count_nodes(*this); }
int RIFormula::modal_depth() const { return depth_of(*this); }
std::set<std::string> RIFormula::variables() const {
  std::set<std::string> out;
  collect_vars(*this, out);
  return out;
}

// ---------- lexer ----------

namespace {

enum class Tok {
  Ident,
  True,
  False,
  Not,
  And,
  Or,
  Implies,
  Iff,
  LParen,
  RParen,
  KwBox,
  KwDia,
  KwCirc,
  KwBullet,
  KwStar,
  End,
};

const char* tok_label(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::True: return "'true'";
    case Tok::False: return "'false'";
    case Tok::Not: return "'~'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Implies: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::KwBox: return "'box'";
    case Tok::KwDia: return "'dia'";
    case Tok::KwCirc: return "'o'";
    case Tok::KwBullet: return "'bullet'";
    case Tok::KwStar: return "'star'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto isident0 = [](char c) { return c >= 'a' && c <= 'z'; };
  auto isident = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (c == '(') {
      out.push_back({Tok::LParen, "(", start});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", start});
      ++i;
    } else if (c == '~') {
      out.push_back({Tok::Not, "~", start});
      ++i;
    } else if (c == '&') {
      out.push_back({Tok::And, "&", start});
      ++i;
    } else if (c == '|') {
      out.push_back({Tok::Or, "|", start});
      ++i;
    } else if (c == '-') {
      if (i + 1 < s.size() && s[i + 1] == '>') {
        out.push_back({Tok::Implies, "->", start});
        i += 2;
      } else {
        throw SyntaxError("unexpected '-'", start, {"'->'"});
      }
    } else if (c == '<') {
      if (i + 2 < s.size() && s[i + 1] == '-' && s[i + 2] == '>') {
        out.push_back({Tok::Iff, "<->", start});
        i += 3;
      } else {
        throw SyntaxError("unexpected '<'", start, {"'<->'"});
      }
    } else if (isident0(c)) {
      std::size_t j = i;
      while (j < s.size() && isident(s[j])) ++j;
      std::string word(s.substr(i, j - i));
      Tok k = Tok::Ident;
      if (word == "true") k = Tok::True;
      else if (word == "false") k = Tok::False;
      else if (word == "box") k = Tok::KwBox;
      else if (word == "dia") k = Tok::KwDia;
      else if (word == "o") k = Tok::KwCirc;
      else if (word == "bullet") k = Tok::KwBullet;
      else if (word == "star") k = Tok::KwStar;
      out.push_back({k, std::move(word), start});
      i = j;
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", start,
                        {"identifier", "'('", "prefix operator"});
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// ---------- parser ----------

// Shared grammar; the Lang policy says which prefix keywords belong to the
// language and how to build modal nodes.

struct BoxLang {
  using F = BoxFormula;
  static constexpr const char* language = "box-language";
  static F var(std::string n) { return F::var(std::move(n)); }
  static F top() { return F::top(); }
  static F bottom() { return F::bottom(); }
  static F neg(F a) { return F::neg(std::move(a)); }
  static F conj(F a, F b) { return F::conj(std::move(a), std::move(b)); }
  static F disj(F a, F b) { return F::disj(std::move(a), std::move(b)); }
  static F implies(F a, F b) { return F::implies(std::move(a), std::move(b)); }
  static F iff(F a, F b) { return F::iff(std::move(a), std::move(b)); }
  static bool modal(Tok t, const F& a, F& out) {
    if (t == Tok::KwBox) { out = F::box(a); return true; }
    if (t == Tok::KwDia) { out = F::dia(a); return true; }
    return false;
  }
  static bool owns(Tok t) { return t == Tok::KwBox || t == Tok::KwDia; }
};

struct RILang {
  using F = RIFormula;
  static constexpr const char* language = "circle-language";
  static F var(std::string n) { return F::var(std::move(n)); }
  static F top() { return F::top(); }
  static F bottom() { return F::bottom(); }
  static F neg(F a) { return F::neg(std::move(a)); }
  static F conj(F a, F b) { return F::conj(std::move(a), std::move(b)); }
  static F disj(F a, F b) { return F::disj(std::move(a), std::move(b)); }
  static F implies(F a, F b) { return F::implies(std::move(a), std::move(b)); }
  static F iff(F a, F b) { return F::iff(std::move(a), std::move(b)); }
  static bool modal(Tok t, const F& a, F& out) {
    if (t == Tok::KwCirc) { out = F::circ(a); return true; }
    if (t == Tok::KwBullet) { out = F::bullet(a); return true; }
    if (t == Tok::KwStar) { out = F::star(a); return true; }
    return false;
  }
  static bool owns(Tok t) {
    return t == Tok::KwCirc || t == Tok::KwBullet || t == Tok::KwStar;
  }
};

bool is_prefix_tok(Tok t) {
  return t == Tok::Not || t == Tok::KwBox || t == Tok::KwDia ||
         t == Tok::KwCirc || t == Tok::KwBullet || t == Tok::KwStar;
}

template <class Lang>
class Parser {
public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  typename Lang::F parse() {
    auto f = parse_iff();
    if (cur().kind != Tok::End) {
      throw SyntaxError("trailing input", cur().offset,
                        {"end of input", "'&'", "'|'", "'->'", "'<->'"});
    }
    return f;
  }

private:
  using F = typename Lang::F;

  const Token& cur() const { return toks_[pos_]; }
  void advance() { ++pos_; }

  F parse_iff() {
    auto lhs = parse_implies();
    if (cur().kind == Tok::Iff) {
      advance();
      return Lang::iff(std::move(lhs), parse_iff());
    }
    return lhs;
  }

  F parse_implies() {
    auto lhs = parse_or();
    if (cur().kind == Tok::Implies) {
      advance();
      return Lang::implies(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  F parse_or() {
    auto f = parse_and();
    while (cur().kind == Tok::Or) {
      advance();
      f = Lang::disj(std::move(f), parse_and());
    }
    return f;
  }

  F parse_and() {
    auto f = parse_prefix();
    while (cur().kind == Tok::And) {
      advance();
      f = Lang::conj(std::move(f), parse_prefix());
    }
    return f;
  }

  F parse_prefix() {
    const Token& t = cur();
    if (t.kind == Tok::Not) {
      advance();
      return Lang::neg(parse_prefix());
    }
    if (is_prefix_tok(t.kind)) {
      if (!Lang::owns(t.kind)) {
        throw SyntaxError("operator '" + t.text + "' is not part of the " +
                              Lang::language,
                          t.offset, {"identifier", "'('", "'~'"});
      }
      advance();
      F arg = parse_prefix();
      F out = arg;
      Lang::modal(t.kind, arg, out);
      return out;
    }
    return parse_primary();
  }

  F parse_primary() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::Ident:
        advance();
        return Lang::var(t.text);
      case Tok::True:
        advance();
        return Lang::top();
      case Tok::False:
        advance();
        return Lang::bottom();
      case Tok::LParen: {
        advance();
        auto f = parse_iff();
        if (cur().kind != Tok::RParen) {
          throw SyntaxError("expected ')'", cur().offset, {"')'"});
        }
        advance();
        return f;
      }
      default:
        throw SyntaxError(std::string("unexpected ") + tok_label(t.kind),
                          t.offset,
                          {"identifier", "'true'", "'false'", "'('",
                           "prefix operator"});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

BoxFormula parse_box(std::string_view text) {
  return Parser<BoxLang>(text).parse();
}
RIFormula parse_ri(std::string_view text) { return Parser<RILang>(text).parse(); }

bool valid_identifier(std::string_view text) {
  if (text.empty() || text[0] < 'a' || text[0] > 'z') return false;
  for (char c : text) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  static const char* reserved[] = {"true", "false", "box", "dia",
                                   "o",    "bullet", "star"};
  for (const char* r : reserved) {
    if (text == r) return false;
  }
  return true;
}

// ---------- printer ----------

namespace {

// Rendered shapes drive parenthesisation: binary operands that are
// themselves binary get parentheses, prefix operands do not.
enum class Shape { Atom, Prefix, Binary };

struct Rendered {
  std::string text;
  Shape shape;
};

std::string operand_binary(const Rendered& r) {
  return r.shape == Shape::Binary ? "(" + r.text + ")" : r.text;
}

std::string operand_prefix(const Rendered& r) {
  return r.shape == Shape::Atom ? r.text : "(" + r.text + ")";
}

template <class F>
struct Pat;  // sugar pattern matching per language

template <>
struct Pat<BoxFormula> {
  static bool is(const BoxFormula& f, BoxOp o) { return f.op() == o; }
  static bool is_false(const BoxFormula& f) {
    return f.op() == BoxOp::Neg && f.child().op() == BoxOp::Top;
  }
  // ~(~a & ~b)
  static bool as_or(const BoxFormula& f, BoxFormula& a, BoxFormula& b) {
    if (f.op() != BoxOp::Neg || f.child().op() != BoxOp::And) return false;
    auto c = f.child();
    if (c.left().op() != BoxOp::Neg || c.right().op() != BoxOp::Neg)
      return false;
    a = c.left().child();
    b = c.right().child();
    return true;
  }
  // ~(a & ~b)
  static bool as_implies(const BoxFormula& f, BoxFormula& a, BoxFormula& b) {
    if (f.op() != BoxOp::Neg || f.child().op() != BoxOp::And) return false;
    auto c = f.child();
    if (c.right().op() != BoxOp::Neg) return false;
    a = c.left();
    b = c.right().child();
    return true;
  }
  // ~(box ~a)
  static bool as_modal_sugar(const BoxFormula& f, std::string& kw,
                             BoxFormula& a) {
    if (f.op() != BoxOp::Neg || f.child().op() != BoxOp::Box) return false;
    auto inner = f.child().child();
    if (inner.op() != BoxOp::Neg) return false;
    kw = "dia";
    a = inner.child();
    return true;
  }
  static const char* prefix_word(BoxOp o) {
    return o == BoxOp::Box ? "box" : nullptr;
  }
};

template <>
struct Pat<RIFormula> {
  static bool is(const RIFormula& f, RIOp o) { return f.op() == o; }
  static bool is_false(const RIFormula& f) {
    return f.op() == RIOp::Neg && f.child().op() == RIOp::Top;
  }
  static bool as_or(const RIFormula& f, RIFormula& a, RIFormula& b) {
    if (f.op() != RIOp::Neg || f.child().op() != RIOp::And) return false;
    auto c = f.child();
    if (c.left().op() != RIOp::Neg || c.right().op() != RIOp::Neg) return false;
    a = c.left().child();
    b = c.right().child();
    return true;
  }
  static bool as_implies(const RIFormula& f, RIFormula& a, RIFormula& b) {
    if (f.op() != RIOp::Neg || f.child().op() != RIOp::And) return false;
    auto c = f.child();
    if (c.right().op() != RIOp::Neg) return false;
    a = c.left();
    b = c.right().child();
    return true;
  }
  // ~(o a)
  static bool as_modal_sugar(const RIFormula& f, std::string& kw,
                             RIFormula& a) {
    if (f.op() != RIOp::Neg || f.child().op() != RIOp::Circ) return false;
    kw = "bullet";
    a = f.child().child();
    return true;
  }
  static const char* prefix_word(RIOp o) {
    if (o == RIOp::Circ) return "o";
    if (o == RIOp::Star) return "star";
    return nullptr;
  }
};

template <class F>
Rendered render(const F& f, const PrintOptions& opts) {
  using P = Pat<F>;
  using Op = decltype(f.op());

  if (f.op() == Op::Var) return {f.name(), Shape::Atom};
  if (f.op() == Op::Top) return {"true", Shape::Atom};
  if (P::is_false(f)) return {"false", Shape::Atom};

  F a = f, b = f;
  if (P::as_or(f, a, b)) {
    auto ra = render(a, opts);
    auto rb = render(b, opts);
    return {operand_binary(ra) + " | " + operand_binary(rb), Shape::Binary};
  }
  if (P::as_implies(f, a, b)) {
    auto ra = render(a, opts);
    auto rb = render(b, opts);
    return {operand_binary(ra) + " -> " + operand_binary(rb), Shape::Binary};
  }
  if (opts.modal_sugar) {
    std::string kw;
    if (P::as_modal_sugar(f, kw, a)) {
      auto ra = render(a, opts);
      return {kw + " " + operand_prefix(ra), Shape::Prefix};
    }
  }
  if (f.op() == Op::And) {
    auto ra = render(f.left(), opts);
    auto rb = render(f.right(), opts);
    return {operand_binary(ra) + " & " + operand_binary(rb), Shape::Binary};
  }
  if (f.op() == Op::Neg) {
    auto ra = render(f.child(), opts);
    return {"~" + operand_prefix(ra), Shape::Prefix};
  }
  const char* word = P::prefix_word(f.op());
  assert(word != nullptr);
  auto ra = render(f.child(), opts);
  return {std::string(word) + " " + operand_prefix(ra), Shape::Prefix};
}

}  // namespace

std::string print_box(const BoxFormula& f, PrintOptions opts) {
  return render(f, opts).text;
}
std::string print_ri(const RIFormula& f, PrintOptions opts) {
  return render(f, opts).text;
}

// ---------- substitution and translation ----------

BoxFormula substitute(const BoxFormula& f,
                      const std::map<std::string, BoxFormula>& map) {
  switch (f.op()) {
    case BoxOp::Var: {
      auto it = map.find(f.name());
      return it == map.end() ? f : it->second;
    }
    case BoxOp::Top:
      return f;
    case BoxOp::Neg:
      return BoxFormula::neg(substitute(f.child(), map));
    case BoxOp::And:
      return BoxFormula::conj(substitute(f.left(), map),
                              substitute(f.right(), map));
    case BoxOp::Box:
      return BoxFormula::box(substitute(f.child(), map));
  }
  throw Error("bad formula node");
}

RIFormula substitute(const RIFormula& f,
                     const std::map<std::string, RIFormula>& map) {
  switch (f.op()) {
    case RIOp::Var: {
      auto it = map.find(f.name());
      return it == map.end() ? f : it->second;
    }
    case RIOp::Top:
      return f;
    case RIOp::Neg:
      return RIFormula::neg(substitute(f.child(), map));
    case RIOp::And:
      return RIFormula::conj(substitute(f.left(), map),
                             substitute(f.right(), map));
    case RIOp::Circ:
      return RIFormula::circ(substitute(f.child(), map));
    case RIOp::Star:
      return RIFormula::star(substitute(f.child(), map));
  }
  throw Error("bad formula node");
}

RIFormula circ_translate(const BoxFormula& f) {
  switch (f.op()) {
    case BoxOp::Var:
      return RIFormula::var(f.name());
    case BoxOp::Top:
      return RIFormula::top();
    case BoxOp::Neg:
      return RIFormula::neg(circ_translate(f.child()));
    case BoxOp::And:
      return RIFormula::conj(circ_translate(f.left()),
                             circ_translate(f.right()));
    case BoxOp::Box: {
      RIFormula t = circ_translate(f.child());
      return RIFormula::conj(RIFormula::circ(t), t);
    }
  }
  throw Error("bad formula node");
}

}  // namespace riml
