#include <set>

#include "doctest.h"
#include "riml/json_io.hpp"
#include "riml/kripke.hpp"

using namespace riml;

namespace {

Frame mk_frame(std::vector<std::string> worlds,
               std::vector<std::pair<std::string, std::string>> rel) {
  return Frame(std::move(worlds), std::move(rel));
}

// Reference semantics, written independently with name sets; used to
// cross-check the production evaluator.
struct RefModel {
  std::vector<std::string> worlds;
  std::set<std::pair<std::string, std::string>> rel;
  std::map<std::string, std::set<std::string>> val;

  std::set<std::string> succ(const std::string& w) const {
    std::set<std::string> out;
    for (const auto& [a, b] : rel) {
      if (a == w) out.insert(b);
    }
    return out;
  }
  bool holds(const std::string& var, const std::string& w) const {
    auto it = val.find(var);
    return it != val.end() && it->second.count(w) > 0;
  }
};

bool ref_box(const RefModel& m, const std::string& w, const BoxFormula& f) {
  switch (f.op()) {
    case BoxOp::Var: return m.holds(f.name(), w);
    case BoxOp::Top: return true;
    case BoxOp::Neg: return !ref_box(m, w, f.child());
    case BoxOp::And:
      return ref_box(m, w, f.left()) && ref_box(m, w, f.right());
    case BoxOp::Box:
      for (const auto& u : m.succ(w)) {
        if (!ref_box(m, u, f.child())) return false;
      }
      return true;
  }
  return false;
}

bool ref_ri(const RefModel& m, const std::string& w, const RIFormula& f) {
  switch (f.op()) {
    case RIOp::Var: return m.holds(f.name(), w);
    case RIOp::Top: return true;
    case RIOp::Neg: return !ref_ri(m, w, f.child());
    case RIOp::And: return ref_ri(m, w, f.left()) && ref_ri(m, w, f.right());
    case RIOp::Circ: {
      if (!ref_ri(m, w, f.child())) return true;
      for (const auto& u : m.succ(w)) {
        if (!ref_ri(m, u, f.child())) return false;
      }
      return true;
    }
    case RIOp::Star: {
      if (ref_ri(m, w, f.child())) return true;
      for (const auto& u : m.succ(w)) {
        if (!ref_ri(m, u, f.child())) return false;
      }
      return true;
    }
  }
  return false;
}

// Every frame on the given worlds (relation bitmask sweep) paired with
// every valuation of {p, q}; stride thins the relation sweep.
template <class Fn>
void sweep_models(const std::vector<std::string>& worlds, int stride, Fn&& fn) {
  const int n = static_cast<int>(worlds.size());
  const int rbits = n * n;
  for (std::uint64_t r = 0; r < (1ull << rbits); r += stride) {
    std::vector<std::pair<std::string, std::string>> rel;
    std::set<std::pair<std::string, std::string>> rel_set;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if ((r >> (i * n + j)) & 1) {
          rel.emplace_back(worlds[i], worlds[j]);
          rel_set.emplace(worlds[i], worlds[j]);
        }
      }
    }
    Frame fr(worlds, rel);
    for (std::uint64_t v = 0; v < (1ull << (2 * n)); ++v) {
      Valuation val{{"p", {}}, {"q", {}}};
      RefModel ref{worlds, rel_set, {}};
      for (int i = 0; i < n; ++i) {
        if ((v >> i) & 1) {
          val["p"].push_back(worlds[i]);
          ref.val["p"].insert(worlds[i]);
        }
        if ((v >> (n + i)) & 1) {
          val["q"].push_back(worlds[i]);
          ref.val["q"].insert(worlds[i]);
        }
      }
      fn(Model(fr, val), ref);
    }
  }
}

}  // namespace

TEST_CASE("eval_box matches the truth clauses") {
  auto m1 = Model(mk_frame({"x", "y"}, {{"x", "y"}}), {{"p", {"y"}}});
  CHECK(eval_box(m1, "x", parse_box("box p")));
  CHECK(eval_box(m1, "y", parse_box("box p")));  // no successors

  auto m2 = Model(mk_frame({"x"}, {{"x", "x"}}), {{"p", {"x"}}});
  CHECK(eval_box(m2, "x", parse_box("box p -> p")));

  CHECK_THROWS_AS(eval_box(m1, "zz", parse_box("p")), UnknownWorld);
}

TEST_CASE("eval_ri matches the truth clauses") {
  auto fr = mk_frame({"x", "y"}, {{"x", "y"}});
  CHECK_FALSE(eval_ri(Model(fr, {{"p", {"x"}}}), "x", parse_ri("o p")));
  CHECK(eval_ri(Model(fr, {{"p", {"x", "y"}}}), "x", parse_ri("o p")));
  CHECK(eval_ri(Model(fr, {{"p", {"x", "y"}}}), "x", parse_ri("star p")));

  auto lonely = Model(mk_frame({"x"}, {}), {});
  CHECK(eval_ri(lonely, "x", parse_ri("o p")));

  // o true holds everywhere
  CHECK(eval_ri(Model(fr, {}), "x", parse_ri("o true")));
  CHECK(eval_ri(Model(fr, {}), "y", parse_ri("o true")));
  CHECK(eval_ri(lonely, "x", parse_ri("o true")));
}

TEST_CASE("production evaluators agree with the reference semantics") {
  std::vector<RIFormula> ri;
  for (const char* s :
       {"p", "q", "~p", "p & q", "p | q", "p -> q", "o p", "o (p -> q)",
        "star p", "star (p & q)", "bullet p", "o o p", "o star (p & q)",
        "~(o ~p & ~p)", "(o p & p) -> p", "o true", "star false",
        "o (p & star q)"}) {
    ri.push_back(parse_ri(s));
  }
  std::vector<BoxFormula> bx;
  for (const char* s : {"p", "box p", "dia p", "box (p -> q)", "box box p",
                        "box p -> p", "dia (p & q) | box q", "~(box (~q))",
                        "box false", "box true"}) {
    bx.push_back(parse_box(s));
  }

  auto check_model = [&](const Model& m, const RefModel& ref) {
    for (const auto& w : ref.worlds) {
      for (const auto& f : ri) {
        CHECK(eval_ri(m, w, f) == ref_ri(ref, w, f));
      }
      for (const auto& f : bx) {
        CHECK(eval_box(m, w, f) == ref_box(ref, w, f));
      }
    }
  };
  sweep_models({"x"}, 1, check_model);
  sweep_models({"x", "y"}, 1, check_model);
  sweep_models({"x", "y", "z"}, 7, check_model);
}

TEST_CASE("circ and bullet split every world") {
  auto xor_check = [](const Model& m, const RefModel& ref) {
    static const RIFormula oc = parse_ri("o (p -> q)");
    static const RIFormula bc = parse_ri("bullet (p -> q)");
    for (const auto& w : ref.worlds) {
      CHECK(eval_ri(m, w, oc) != eval_ri(m, w, bc));
    }
  };
  sweep_models({"x", "y"}, 1, xor_check);
}

TEST_CASE("circ is vacuously true without successors") {
  auto m = Model(mk_frame({"x", "y"}, {{"y", "x"}}), {{"p", {"x"}}});
  // x has no successors
  CHECK(eval_ri(m, "x", parse_ri("o p")));
  CHECK(eval_ri(m, "x", parse_ri("o ~p")));
  CHECK(eval_ri(m, "x", parse_ri("o false")));
}

TEST_CASE("model_valid") {
  auto fr = mk_frame({"x", "y"}, {{"x", "y"}});
  CHECK(model_valid(Model(fr, {{"p", {"x"}}}), parse_ri("bullet p -> p")).holds);

  auto v = model_valid(Model(fr, {{"p", {"x"}}}), parse_ri("o p"));
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->world == "x");

  auto refl = Model(mk_frame({"x"}, {{"x", "x"}}), {{"p", {}}});
  CHECK(model_valid(refl, parse_ri("o p")).holds);
}

TEST_CASE("frame_valid finds the first witness in world-then-valuation order") {
  auto fr = mk_frame({"x", "y"}, {{"x", "y"}});
  auto v = frame_valid(fr, parse_ri("o p"));
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->world == "x");
  CHECK(v.witness->valuation ==
        Valuation{{"p", {"x"}}});
}

TEST_CASE("frame_valid against a straightforward reimplementation") {
  std::vector<RIFormula> fs = {parse_ri("o p"), parse_ri("p | o p"),
                               parse_ri("o p -> p"),
                               parse_ri("(o p & o q) -> o (p & q)"),
                               parse_ri("star p -> p")};
  auto naive = [](const Frame& fr, const RIFormula& f) -> Verdict {
    auto vars = f.variables();
    std::vector<std::string> vlist(vars.begin(), vars.end());
    const int n = fr.size();
    const int bits = static_cast<int>(vlist.size()) * n;
    for (int w = 0; w < n; ++w) {
      for (std::uint64_t idx = 0; idx < (1ull << bits); ++idx) {
        Valuation val;
        for (std::size_t s = 0; s < vlist.size(); ++s) {
          std::vector<std::string> ws;
          for (int i = 0; i < n; ++i) {
            if ((idx >> (s * n + i)) & 1) ws.push_back(fr.world(i));
          }
          val[vlist[s]] = ws;
        }
        Model m(fr, val);
        if (!eval_ri(m, w, f)) {
          return {false, Witness{fr.world(w), val}};
        }
      }
    }
    return {true, std::nullopt};
  };

  std::vector<std::string> worlds{"x", "y"};
  for (std::uint64_t r = 0; r < 16; ++r) {
    std::vector<std::pair<std::string, std::string>> rel;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        if ((r >> (i * 2 + j)) & 1) rel.emplace_back(worlds[i], worlds[j]);
      }
    }
    Frame fr(worlds, rel);
    for (const auto& f : fs) {
      auto got = frame_valid(fr, f);
      auto want = naive(fr, f);
      CHECK(got.holds == want.holds);
      if (!got.holds) {
        REQUIRE(got.witness.has_value());
        CHECK(got.witness->world == want.witness->world);
        CHECK(got.witness->valuation == want.witness->valuation);
      }
    }
  }
}

TEST_CASE("frame_valid budget") {
  std::vector<std::string> many;
  for (int i = 0; i < 32; ++i) many.push_back("w" + std::to_string(i + 1));
  Frame big(many, {});
  StepBudget tiny(1);
  CHECK_THROWS_AS(frame_valid(big, parse_ri("o p & q"), tiny), BudgetExceeded);
}

TEST_CASE("frame json round trip") {
  auto doc = load_json(R"({"worlds": ["x", "y"],
                           "rel": [["y", "x"], ["x", "x"]],
                           "val": {"p": ["y"]}})");
  Model m = model_from_json(doc);
  CHECK(m.frame().size() == 2);
  CHECK(m.frame().related(0, 0));
  CHECK(m.frame().related(1, 0));
  CHECK_FALSE(m.frame().related(0, 1));
  CHECK(m.extension("p") == 0b10);

  Json out = model_to_json(m);
  CHECK(out["worlds"] == Json::array({"x", "y"}));
  // canonical pair order: by source then target index
  CHECK(out["rel"] == Json::array({Json::array({"x", "x"}),
                                   Json::array({"y", "x"})}));
  CHECK(model_from_json(out).frame() == m.frame());
}

TEST_CASE("frame json rejects malformed documents") {
  CHECK_THROWS_AS(model_from_json(load_json(
                      R"({"worlds": ["x"], "rel": [], "bogus": 1})")),
                  InputError);
  CHECK_THROWS_AS(model_from_json(load_json(R"({"worlds": ["x"]})")),
                  InputError);
  CHECK_THROWS_AS(model_from_json(load_json(
                      R"({"worlds": ["x", "x"], "rel": []})")),
                  InputError);
  CHECK_THROWS_AS(model_from_json(load_json(
                      R"({"worlds": ["x"], "rel": [["x","x"],["x","x"]]})")),
                  InputError);
  CHECK_THROWS_AS(model_from_json(load_json(
                      R"({"worlds": ["x"], "rel": [["x","y"]]})")),
                  UnknownWorld);
  CHECK_THROWS_AS(model_from_json(load_json(
                      R"({"worlds": ["x"], "rel": [], "val": {"p": ["y"]}})")),
                  UnknownWorld);
  CHECK_THROWS_AS(model_from_json(load_json(
                      R"({"worlds": ["x"], "rel": [], "val": {"Box": []}})")),
                  InputError);
  CHECK_THROWS_AS(model_from_json(load_json(
                      R"({"worlds": ["x"], "rel": [], "val": {"o": []}})")),
                  InputError);
  CHECK_THROWS_AS(load_json("{nope"), InputError);
  CHECK_THROWS_AS(model_from_json(load_json(R"({"worlds": [], "rel": []})")),
                  InputError);
}

TEST_CASE("box is definable on reflexive models") {
  // On reflexive frames box a matches o a* & a* pointwise.
  std::vector<BoxFormula> fs = {parse_box("box p"), parse_box("box (p -> q)"),
                                parse_box("box box p"),
                                parse_box("dia p & box q")};
  auto check = [&](const Model& m, const RefModel& ref) {
    // make reflexive: skip non-reflexive sweeps
    for (const auto& w : ref.worlds) {
      if (!ref.rel.count({w, w})) return;
    }
    for (const auto& f : fs) {
      auto t = circ_translate(f);
      for (const auto& w : ref.worlds) {
        CHECK(eval_box(m, w, f) == eval_ri(m, w, t));
      }
    }
  };
  sweep_models({"x", "y"}, 1, check);
  sweep_models({"x", "y", "z"}, 3, check);
}
