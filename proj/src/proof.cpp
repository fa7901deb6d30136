#include "riml/proof.hpp"

#include <utility>

namespace riml {

const std::vector<Schema>& base_schemata() {
  static const std::vector<Schema> base = [] {
    using R = RIFormula;
    const R p = R::var("p");
    const R q = R::var("q");
    std::vector<Schema> out;
    out.push_back({"b0", R::circ(R::top())});
    out.push_back({"b1", R::implies(R::bullet(p), p)});
    out.push_back({"b2", R::implies(R::conj(R::circ(p), R::circ(q)),
                                    R::circ(R::conj(p, q)))});
    return out;
  }();
  return base;
}

namespace {

void collect_atoms(const RIFormula& f, std::vector<std::string>& order,
                   std::map<std::string, int>& index) {
  switch (f.op()) {
    case RIOp::Top:
      return;
    case RIOp::Var:
    case RIOp::Circ:
    case RIOp::Star: {
      std::string key = print_ri(f);
      if (index.emplace(key, static_cast<int>(order.size())).second) {
        order.push_back(std::move(key));
      }
      return;
    }
    case RIOp::Neg:
      collect_atoms(f.child(), order, index);
      return;
    case RIOp::And:
      collect_atoms(f.left(), order, index);
      collect_atoms(f.right(), order, index);
      return;
  }
}

bool eval_abstracted(const RIFormula& f,
                     const std::map<std::string, int>& index,
                     std::uint64_t bits) {
  switch (f.op()) {
    case RIOp::Top:
      return true;
    case RIOp::Var:
    case RIOp::Circ:
    case RIOp::Star:
      return (bits >> index.at(print_ri(f))) & 1;
    case RIOp::Neg:
      return !eval_abstracted(f.child(), index, bits);
    case RIOp::And:
      return eval_abstracted(f.left(), index, bits) &&
             eval_abstracted(f.right(), index, bits);
  }
  return false;
}

std::optional<std::pair<RIFormula, RIFormula>> split_implies(
    const RIFormula& f) {
  if (f.op() != RIOp::Neg) return std::nullopt;
  RIFormula body = f.child();
  if (body.op() != RIOp::And || body.right().op() != RIOp::Neg) {
    return std::nullopt;
  }
  return std::make_pair(body.left(), body.right().child());
}

bool match(const RIFormula& pattern, const RIFormula& f,
           std::map<std::string, RIFormula>& out) {
  if (pattern.op() == RIOp::Var) {
    auto [it, fresh] = out.emplace(pattern.name(), f);
    return fresh || it->second == f;
  }
  if (pattern.op() != f.op()) return false;
  switch (pattern.op()) {
    case RIOp::Top:
      return true;
    case RIOp::And:
      return match(pattern.left(), f.left(), out) &&
             match(pattern.right(), f.right(), out);
    case RIOp::Neg:
    case RIOp::Circ:
    case RIOp::Star:
      return match(pattern.child(), f.child(), out);
    default:
      return false;
  }
}

}  // namespace

bool taut_check(const RIFormula& f, int max_atoms) {
  std::vector<std::string> order;
  std::map<std::string, int> index;
  collect_atoms(f, order, index);
  if (order.size() > static_cast<std::size_t>(max_atoms) ||
      order.size() > 30) {
    throw AtomBudgetExceeded("tautology check over " +
                             std::to_string(order.size()) + " atoms; limit " +
                             std::to_string(max_atoms));
  }
  const std::uint64_t rows = 1ull << order.size();
  for (std::uint64_t bits = 0; bits < rows; ++bits) {
    if (!eval_abstracted(f, index, bits)) return false;
  }
  return true;
}

std::optional<std::map<std::string, RIFormula>> match_schema(
    const RIFormula& f, const Schema& s) {
  std::map<std::string, RIFormula> out;
  if (!match(s.pattern, f, out)) return std::nullopt;
  return out;
}

RIFormula apply_bn(const RIFormula& premise) {
  auto imp = split_implies(premise);
  if (!imp) {
    throw ShapeError("circle necessitation needs an implication premise");
  }
  const auto& [a, b] = *imp;
  return RIFormula::implies(RIFormula::conj(RIFormula::circ(a), a),
                            RIFormula::conj(RIFormula::circ(b), b));
}

AxiomSystem translate_axiomatization(const std::vector<BoxFormula>& axioms) {
  AxiomSystem sys;
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    sys.extras.push_back(
        {"extra" + std::to_string(i + 1), circ_translate(axioms[i])});
  }
  return sys;
}

Justification Justification::taut() { return {}; }

Justification Justification::axiom(std::string name) {
  Justification j;
  j.kind = Kind::Axiom;
  j.axiom_name = std::move(name);
  return j;
}

Justification Justification::extra(int index) {
  Justification j;
  j.kind = Kind::Extra;
  j.extra_index = index;
  return j;
}

Justification Justification::mp(int implication_line, int antecedent_line) {
  Justification j;
  j.kind = Kind::MP;
  j.from1 = implication_line;
  j.from2 = antecedent_line;
  return j;
}

Justification Justification::us(int from,
                                std::map<std::string, RIFormula> sub) {
  Justification j;
  j.kind = Kind::US;
  j.from1 = from;
  j.sub = std::move(sub);
  return j;
}

Justification Justification::bn(int from) {
  Justification j;
  j.kind = Kind::BN;
  j.from1 = from;
  return j;
}

CheckResult check_proof(const Proof& p, const AxiomSystem& sys) {
  CheckResult res;
  if (p.lines.empty()) {
    res.reason = "empty proof";
    return res;
  }
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    const RIFormula& f = p.lines[i].formula;
    const Justification& j = p.lines[i].just;
    auto fail = [&](std::string why) {
      CheckResult bad;
      bad.error_line = line_no;
      bad.reason = std::move(why);
      return bad;
    };
    auto earlier = [&](int k) { return k >= 1 && k < line_no; };
    auto at = [&](int k) -> const RIFormula& {
      return p.lines[k - 1].formula;
    };
    switch (j.kind) {
      case Justification::Kind::Taut:
        if (!taut_check(f)) return fail("taut: not a tautology instance");
        break;
      case Justification::Kind::Axiom: {
        const Schema* s = nullptr;
        for (const auto& b : base_schemata()) {
          if (b.name == j.axiom_name) s = &b;
        }
        if (!s) return fail("axiom: unknown schema " + j.axiom_name);
        if (!match_schema(f, *s)) {
          return fail("axiom: not an instance of " + j.axiom_name);
        }
        break;
      }
      case Justification::Kind::Extra: {
        if (j.extra_index < 0 ||
            j.extra_index >= static_cast<int>(sys.extras.size())) {
          return fail("extra: index " + std::to_string(j.extra_index) +
                      " out of range");
        }
        if (!match_schema(f, sys.extras[j.extra_index])) {
          return fail("extra: not an instance of " +
                      sys.extras[j.extra_index].name);
        }
        break;
      }
      case Justification::Kind::MP: {
        if (!earlier(j.from1) || !earlier(j.from2)) {
          return fail("mp: line reference out of range");
        }
        auto imp = split_implies(at(j.from1));
        if (!imp) {
          return fail("mp: line " + std::to_string(j.from1) +
                      " is not an implication");
        }
        if (imp->first != at(j.from2)) {
          return fail("mp: antecedent of line " + std::to_string(j.from1) +
                      " is not line " + std::to_string(j.from2));
        }
        if (imp->second != f) {
          return fail("mp: line " + std::to_string(j.from1) +
                      " does not conclude this formula");
        }
        break;
      }
      case Justification::Kind::US: {
        if (!earlier(j.from1)) return fail("us: line reference out of range");
        for (const auto& [var, g] : j.sub) {
          (void)g;
          if (!valid_identifier(var)) {
            return fail("us: bad variable name " + var);
          }
        }
        if (substitute(at(j.from1), j.sub) != f) {
          return fail("us: not a substitution image of line " +
                      std::to_string(j.from1));
        }
        break;
      }
      case Justification::Kind::BN: {
        if (!earlier(j.from1)) return fail("bn: line reference out of range");
        auto imp = split_implies(at(j.from1));
        if (!imp) {
          return fail("bn: line " + std::to_string(j.from1) +
                      " is not an implication");
        }
        if (apply_bn(at(j.from1)) != f) {
          return fail("bn: conclusion does not match line " +
                      std::to_string(j.from1));
        }
        break;
      }
    }
  }
  res.ok = true;
  res.theorem = p.lines.back().formula;
  return res;
}

int append_circ_mono(Proof& p, int iff_line, const RIFormula& a,
                     const RIFormula& b) {
  using R = RIFormula;
  auto add = [&](R f, Justification j) {
    p.lines.push_back({std::move(f), std::move(j)});
    return static_cast<int>(p.lines.size());
  };
  const R iff_ab = R::iff(a, b);
  const R oa = R::circ(a);
  const R ob = R::circ(b);
  const R with_a = R::conj(oa, a);
  const R with_na = R::conj(oa, R::neg(a));
  const R bn_out = R::implies(with_a, R::conj(ob, b));
  const R with_a_ob = R::implies(with_a, ob);
  const R with_na_nb = R::implies(with_na, R::neg(b));
  const R nb_ob = R::implies(R::neg(b), ob);
  const R with_na_ob = R::implies(with_na, ob);
  const R split_ob = R::implies(R::disj(with_a, with_na), ob);
  const R merged_ob = R::implies(R::conj(oa, R::disj(a, R::neg(a))), ob);
  const R goal = R::implies(oa, ob);

  int c1 = add(R::implies(iff_ab, R::implies(a, b)), Justification::taut());
  int c2 = add(R::implies(a, b), Justification::mp(c1, iff_line));
  int c3 = add(bn_out, Justification::bn(c2));
  int c4 = add(R::implies(bn_out, with_a_ob), Justification::taut());
  int c5 = add(with_a_ob, Justification::mp(c4, c3));
  int c6 = add(R::implies(iff_ab, with_na_nb), Justification::taut());
  int c7 = add(with_na_nb, Justification::mp(c6, iff_line));
  int c8 = add(R::implies(R::bullet(b), b), Justification::axiom("b1"));
  int c9 = add(R::implies(R::implies(R::bullet(b), b), nb_ob),
               Justification::taut());
  int c10 = add(nb_ob, Justification::mp(c9, c8));
  int c11 = add(R::implies(with_na_nb, R::implies(nb_ob, with_na_ob)),
                Justification::taut());
  int c12 = add(R::implies(nb_ob, with_na_ob), Justification::mp(c11, c7));
  int c13 = add(with_na_ob, Justification::mp(c12, c10));
  int c14 = add(R::implies(with_a_ob, R::implies(with_na_ob, split_ob)),
                Justification::taut());
  int c15 = add(R::implies(with_na_ob, split_ob), Justification::mp(c14, c5));
  int c16 = add(split_ob, Justification::mp(c15, c13));
  int c17 = add(R::implies(split_ob, merged_ob), Justification::taut());
  int c18 = add(merged_ob, Justification::mp(c17, c16));
  int c19 = add(R::implies(merged_ob, goal), Justification::taut());
  return add(goal, Justification::mp(c19, c18));
}

int derive_circ(Proof& p) {
  if (p.lines.empty()) {
    throw ShapeError("derivation of the circled theorem needs a proof");
  }
  using R = RIFormula;
  const int n = static_cast<int>(p.lines.size());
  const R t = p.lines.back().formula;
  const R top = R::top();
  const R top_iff_t = R::iff(top, t);
  p.lines.push_back({R::implies(t, top_iff_t), Justification::taut()});
  p.lines.push_back({top_iff_t, Justification::mp(n + 1, n)});
  int mono = append_circ_mono(p, n + 2, top, t);
  p.lines.push_back({R::circ(top), Justification::axiom("b0")});
  int b0_line = static_cast<int>(p.lines.size());
  p.lines.push_back({R::circ(t), Justification::mp(mono, b0_line)});
  return static_cast<int>(p.lines.size());
}

namespace {

void reject_keys(const Json& j, std::initializer_list<const char*> allowed,
                 const std::string& what) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool ok = false;
    for (const char* a : allowed) {
      if (key == a) ok = true;
    }
    if (!ok) throw InputError(what + ": unknown key \"" + key + "\"");
  }
}

int int_field(const Json& j, const char* key, const std::string& what) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw InputError(what + ": needs an integer \"" + std::string(key) +
                     "\"");
  }
  return j[key].get<int>();
}

std::vector<int> from_field(const Json& j, std::size_t arity,
                            const std::string& what) {
  if (!j.contains("from") || !j["from"].is_array() ||
      j["from"].size() != arity) {
    throw InputError(what + ": needs a \"from\" array of " +
                     std::to_string(arity));
  }
  std::vector<int> out;
  for (const auto& e : j["from"]) {
    if (!e.is_number_integer()) {
      throw InputError(what + ": \"from\" entries must be integers");
    }
    out.push_back(e.get<int>());
  }
  return out;
}

Justification just_from_json(const Json& j, const std::string& what) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw InputError(what + ": needs a \"kind\" string");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "taut") {
    reject_keys(j, {"kind"}, what);
    return Justification::taut();
  }
  if (kind == "axiom") {
    reject_keys(j, {"kind", "name"}, what);
    if (!j.contains("name") || !j["name"].is_string()) {
      throw InputError(what + ": needs a \"name\" string");
    }
    return Justification::axiom(j["name"].get<std::string>());
  }
  if (kind == "extra") {
    reject_keys(j, {"kind", "index"}, what);
    return Justification::extra(int_field(j, "index", what));
  }
  if (kind == "mp") {
    reject_keys(j, {"kind", "from"}, what);
    auto from = from_field(j, 2, what);
    return Justification::mp(from[0], from[1]);
  }
  if (kind == "us") {
    reject_keys(j, {"kind", "from", "sub"}, what);
    auto from = from_field(j, 1, what);
    if (!j.contains("sub") || !j["sub"].is_object()) {
      throw InputError(what + ": needs a \"sub\" object");
    }
    std::map<std::string, RIFormula> sub;
    for (const auto& [var, text] : j["sub"].items()) {
      if (!text.is_string()) {
        throw InputError(what + ": substitution values must be strings");
      }
      sub.emplace(var, parse_ri(text.get<std::string>()));
    }
    return Justification::us(from[0], std::move(sub));
  }
  if (kind == "bn") {
    reject_keys(j, {"kind", "from"}, what);
    return Justification::bn(from_field(j, 1, what)[0]);
  }
  throw InputError(what + ": unknown justification kind \"" + kind + "\"");
}

Json just_to_json(const Justification& j) {
  Json out;
  switch (j.kind) {
    case Justification::Kind::Taut:
      out["kind"] = "taut";
      break;
    case Justification::Kind::Axiom:
      out["kind"] = "axiom";
      out["name"] = j.axiom_name;
      break;
    case Justification::Kind::Extra:
      out["kind"] = "extra";
      out["index"] = j.extra_index;
      break;
    case Justification::Kind::MP:
      out["kind"] = "mp";
      out["from"] = Json::array({j.from1, j.from2});
      break;
    case Justification::Kind::US: {
      out["kind"] = "us";
      out["from"] = Json::array({j.from1});
      Json sub = Json::object();
      for (const auto& [var, g] : j.sub) sub[var] = print_ri(g);
      out["sub"] = std::move(sub);
      break;
    }
    case Justification::Kind::BN:
      out["kind"] = "bn";
      out["from"] = Json::array({j.from1});
      break;
  }
  return out;
}

}  // namespace

ProofDocument proof_from_json(const Json& doc) {
  if (!doc.is_object()) throw InputError("proof: expected an object");
  reject_keys(doc, {"system", "lines"}, "proof");
  ProofDocument out;
  if (doc.contains("system")) {
    const Json& sys = doc["system"];
    if (!sys.is_object()) throw InputError("proof: \"system\" must be an object");
    reject_keys(sys, {"extras"}, "proof system");
    if (sys.contains("extras")) {
      if (!sys["extras"].is_array()) {
        throw InputError("proof system: \"extras\" must be an array");
      }
      int i = 1;
      for (const auto& e : sys["extras"]) {
        if (!e.is_string()) {
          throw InputError("proof system: extras must be formula strings");
        }
        out.system.extras.push_back(
            {"extra" + std::to_string(i++), parse_ri(e.get<std::string>())});
      }
    }
  }
  if (!doc.contains("lines") || !doc["lines"].is_array()) {
    throw InputError("proof: needs a \"lines\" array");
  }
  int line_no = 1;
  for (const auto& entry : doc["lines"]) {
    const std::string what = "proof line " + std::to_string(line_no++);
    if (!entry.is_object()) throw InputError(what + ": expected an object");
    reject_keys(entry, {"formula", "just"}, what);
    if (!entry.contains("formula") || !entry["formula"].is_string()) {
      throw InputError(what + ": needs a \"formula\" string");
    }
    if (!entry.contains("just")) {
      throw InputError(what + ": needs a \"just\" object");
    }
    out.proof.lines.push_back(
        {parse_ri(entry["formula"].get<std::string>()),
         just_from_json(entry["just"], what)});
  }
  return out;
}

Json proof_to_json(const ProofDocument& doc) {
  Json out;
  if (!doc.system.extras.empty()) {
    Json extras = Json::array();
    for (const auto& s : doc.system.extras) extras.push_back(print_ri(s.pattern));
    out["system"] = Json{{"extras", std::move(extras)}};
  }
  Json lines = Json::array();
  for (const auto& line : doc.proof.lines) {
    Json entry;
    entry["formula"] = print_ri(line.formula);
    entry["just"] = just_to_json(line.just);
    lines.push_back(std::move(entry));
  }
  out["lines"] = std::move(lines);
  return out;
}

Json check_result_to_json(const CheckResult& r) {
  Json out;
  out["ok"] = r.ok;
  if (r.ok) {
    out["theorem"] = print_ri(*r.theorem);
  } else {
    out["line"] = r.error_line;
    out["reason"] = r.reason;
  }
  return out;
}

}  // namespace riml
