#include <set>

#include "doctest.h"
#include "riml/decide.hpp"

using namespace riml;

namespace {

ClassQuery query(const char* cls, int max, bool mirror = false) {
  return ClassQuery{FrameClass::parse(cls), mirror, max};
}

bool refutes(const Countermodel& cm, const RIFormula& f) {
  return !eval_ri(Model(cm.frame, cm.valuation), cm.world, f);
}

bool refutes(const Countermodel& cm, const BoxFormula& f) {
  return !eval_box(Model(cm.frame, cm.valuation), cm.world, f);
}

}  // namespace

TEST_CASE("frame lists") {
  auto one = enumerate_frames(1);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == Frame({"w1"}, {}));
  CHECK(one[1] == Frame({"w1"}, {{"w1", "w1"}}));

  auto two = enumerate_frames(2);
  CHECK(two.size() == 16);
  int reflexive = 0;
  for (const auto& f : two) {
    if (class_member(f, FrameClass(FrameClass::Kind::Reflexive))) ++reflexive;
  }
  CHECK(reflexive == 4);

  StepBudget tiny(100);
  CHECK_THROWS_AS(enumerate_frames(3, tiny), BudgetExceeded);
}

TEST_CASE("mirror-closed membership") {
  ClassQuery refl_m = query("reflexive", 2, true);
  for (const auto& f : enumerate_frames(2)) {
    CHECK(query_member(f, refl_m));  // any diagonal completes to reflexive
  }

  Frame arrow({"w1", "w2"}, {{"w1", "w2"}});
  CHECK_FALSE(class_member(arrow, FrameClass(FrameClass::Kind::Euclidean)));
  CHECK(query_member(arrow, query("euclidean", 2, true)));

  Frame fork({"w1", "w2", "w3"}, {{"w1", "w2"}, {"w1", "w3"}});
  CHECK_FALSE(query_member(fork, query("euclidean", 3, true)));

  Frame bare({"w1"}, {});
  CHECK_FALSE(class_member(bare, FrameClass(FrameClass::Kind::Serial)));
  CHECK(query_member(bare, query("serial", 1, true)));
  CHECK_FALSE(query_member(bare, query("serial", 1, false)));
}

TEST_CASE("circle-language validity fixtures") {
  StepBudget budget;
  auto r1 = valid_over_class(parse_ri("p | o p"), query("all", 3), budget);
  CHECK(r1.valid);
  CHECK_FALSE(r1.countermodel.has_value());
  CHECK(r1.frames_checked == 2 + 16 + 512);

  auto k = circ_translate(parse_box("box (p -> q) -> (box p -> box q)"));
  CHECK(valid_over_class(k, query("all", 3), budget).valid);

  auto five = circ_translate(parse_box("dia p -> box (dia p)"));
  auto r5 = valid_over_class(five, query("euclidean", 3), budget);
  CHECK_FALSE(r5.valid);
  REQUIRE(r5.countermodel.has_value());
  CHECK(r5.countermodel->frame.size() == 2);
  CHECK(class_member(r5.countermodel->frame,
                     FrameClass(FrameClass::Kind::Euclidean)));
  CHECK(refutes(*r5.countermodel, five));

  auto four = parse_ri("(o p & p) -> o (o p & p)");
  CHECK(valid_over_class(four, query("transitive", 3), budget).valid);
  CHECK(valid_over_class(four, query("all", 2), budget).valid);
  auto r4 = valid_over_class(four, query("all", 3), budget);
  CHECK_FALSE(r4.valid);
  REQUIRE(r4.countermodel.has_value());
  CHECK(r4.countermodel->frame.size() == 3);  // no smaller refutation exists
  CHECK(refutes(*r4.countermodel, four));
}

TEST_CASE("class comparisons") {
  StepBudget budget;
  auto t = compare_class_validity(parse_box("box p -> p"), query("all", 2),
                                  query("reflexive", 2), budget);
  CHECK_FALSE(t.agree);
  CHECK_FALSE(t.first.valid);
  CHECK(t.second.valid);
  REQUIRE(t.first.countermodel.has_value());
  CHECK(t.first.countermodel->frame == Frame({"w1"}, {}));
  CHECK(t.first.countermodel->world == "w1");
  CHECK(t.first.frames_checked == 1);
  CHECK(t.second.frames_checked == 1 + 4);

  // box p alone fails over both classes: V(p) = {} on a reflexive point
  auto bp = compare_class_validity(parse_box("box p"), query("all", 2),
                                   query("reflexive", 2), budget);
  CHECK(bp.agree);
  CHECK_FALSE(bp.first.valid);
  CHECK_FALSE(bp.second.valid);

  for (const char* s :
       {"box p -> p", "box p -> box (box p)",
        "box (p -> q) -> (box p -> box q)", "dia p -> box (dia p)", "box p"}) {
    auto tr = circ_translate(parse_box(s));
    CHECK(compare_class_validity(tr, query("transitive", 3),
                                 query("transitive+reflexive", 3), budget)
              .agree);
  }

  for (const char* s : {"o p", "p | o p", "o p & ~p", "o (p & q) -> o p"}) {
    CHECK(compare_class_validity(parse_ri(s), query("all", 3),
                                 query("reflexive", 3), budget)
              .agree);
  }
}

TEST_CASE("generated corpora") {
  auto small = generate_ri_formulas(3, 3);
  // sizes 1..3 give 2 + 4 + 12 formulas; the axiom instances are all new
  // at this size bound
  REQUIRE(small.size() == 18 + 13);
  CHECK(print_ri(small[0]) == "p");
  CHECK(print_ri(small[2]) == "~p");
  CHECK(print_ri(small[4]) == "o p");
  CHECK(print_ri(small[18]) == "o true");

  auto ri = generate_ri_formulas();
  auto box = generate_box_formulas();
  CHECK(box.size() >= 1000);
  // same shapes, plus the axiom instances that are not already generated:
  // the two variable instances of the second axiom fall inside the corpus
  CHECK(ri.size() == box.size() + 11);

  std::set<std::string> prints;
  for (const auto& f : ri) {
    prints.insert(print_ri(f));
    CHECK(f.modal_depth() <= 3);
  }
  CHECK(prints.size() == ri.size());  // no duplicates

  auto again = generate_ri_formulas();
  REQUIRE(again.size() == ri.size());
  for (std::size_t i = 0; i < ri.size(); i += 101) {
    CHECK(again[i] == ri[i]);
  }

  bool has_star = false;
  for (const auto& f : generate_ri_formulas(4, 3, true)) {
    if (print_ri(f) == "star p") has_star = true;
  }
  CHECK(has_star);
}

TEST_CASE("oracle soundness and monotonicity on a corpus sample") {
  auto corpus = generate_ri_formulas();
  StepBudget budget = StepBudget::unlimited();
  for (std::size_t i = 0; i < corpus.size(); i += 97) {
    auto r2 = valid_over_class(corpus[i], query("all", 2), budget);
    if (r2.countermodel) CHECK(refutes(*r2.countermodel, corpus[i]));
    auto r3 = valid_over_class(corpus[i], query("all", 3), budget);
    if (r3.valid) CHECK(r2.valid);
    if (r3.countermodel) CHECK(refutes(*r3.countermodel, corpus[i]));
  }
}

TEST_CASE("mirror closure never changes circle verdicts") {
  auto corpus = generate_ri_formulas(4, 2);
  for (const char* cls : {"reflexive", "euclidean", "serial"}) {
    StepBudget budget = StepBudget::unlimited();
    auto plain = valid_over_class_many(corpus, query(cls, 3), budget, 2);
    auto closed = valid_over_class_many(corpus, query(cls, 3, true), budget, 2);
    REQUIRE(plain.size() == corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      CHECK(plain[i].valid == closed[i].valid);
    }
  }
}

TEST_CASE("batch scan equals single scans and every worker count") {
  auto corpus = generate_ri_formulas(5, 2);
  ClassQuery q = query("all", 3);
  StepBudget b0 = StepBudget::unlimited();
  auto batch = valid_over_class_many(corpus, q, b0, 1);
  REQUIRE(batch.size() == corpus.size());

  for (std::size_t i = 0; i < corpus.size(); i += 13) {
    StepBudget b = StepBudget::unlimited();
    auto single = valid_over_class(corpus[i], q, b);
    CHECK(validity_report_to_json(single).dump() ==
          validity_report_to_json(batch[i]).dump());
  }

  for (int workers : {2, 3, 4, 8}) {
    StepBudget b = StepBudget::unlimited();
    auto redo = valid_over_class_many(corpus, q, b, workers);
    REQUIRE(redo.size() == batch.size());
    for (std::size_t i = 0; i < batch.size(); ++i) {
      CHECK(validity_report_to_json(redo[i]).dump() ==
            validity_report_to_json(batch[i]).dump());
    }
  }
}

TEST_CASE("report serialization") {
  StepBudget budget;
  auto r = valid_over_class(parse_ri("bullet p"), query("all", 2), budget);
  CHECK(validity_report_to_json(r).dump() ==
        R"({"verdict":"countermodel","countermodel":{"worlds":["w1"],)"
        R"("rel":[],"val":{"p":[]},"world":"w1"},"frames_checked":1})");

  auto v = valid_over_class(parse_ri("o true"), query("all", 1), budget);
  CHECK(validity_report_to_json(v).dump() ==
        R"({"verdict":"valid_up_to_bound","frames_checked":2})");
}

TEST_CASE("query validation and budgets") {
  StepBudget budget;
  RIFormula f = parse_ri("p | o p");
  CHECK_THROWS_AS(valid_over_class(f, query("all", 0), budget), InputError);
  CHECK_THROWS_AS(valid_over_class(f, query("all", 8), budget),
                  BudgetExceeded);
  CHECK_THROWS_AS(valid_over_class(f, query("all", 2), budget, 0),
                  InputError);
  StepBudget tiny(10);
  CHECK_THROWS_AS(valid_over_class(f, query("all", 3), tiny), BudgetExceeded);
  StepBudget tiny2(10);
  CHECK_THROWS_AS(valid_over_class(f, query("all", 3), tiny2, 4),
                  BudgetExceeded);
}
