#include "doctest.h"
#include "riml/formula.hpp"

using namespace riml;

TEST_CASE("parse_box desugars derived connectives") {
  auto p = BoxFormula::var("p");

  CHECK(parse_box("p") == p);
  CHECK(parse_box("box p -> p") ==
        BoxFormula::neg(BoxFormula::conj(BoxFormula::box(p),
                                         BoxFormula::neg(p))));
  CHECK(parse_box("dia p") ==
        BoxFormula::neg(BoxFormula::box(BoxFormula::neg(p))));
}

TEST_CASE("parse_ri primitives and sugar") {
  auto p = RIFormula::var("p");

  CHECK(parse_ri("o p & p") == RIFormula::conj(RIFormula::circ(p), p));
  CHECK(parse_ri("bullet p") == RIFormula::neg(RIFormula::circ(p)));
  CHECK(parse_ri("star p") == RIFormula::star(p));
  CHECK(parse_ri("true").op() == RIOp::Top);
  CHECK(parse_ri("false") == RIFormula::neg(RIFormula::top()));
  CHECK(parse_ri("o true") == RIFormula::circ(RIFormula::top()));
}

TEST_CASE("precedence and associativity") {
  auto p = RIFormula::var("p");
  auto q = RIFormula::var("q");
  auto r = RIFormula::var("r");

  CHECK(parse_ri("p -> q -> r") ==
        RIFormula::implies(p, RIFormula::implies(q, r)));
  CHECK(parse_ri("p & q & r") == RIFormula::conj(RIFormula::conj(p, q), r));
  CHECK(parse_ri("p | q & r") == RIFormula::disj(p, RIFormula::conj(q, r)));
  CHECK(parse_ri("~p & q") == RIFormula::conj(RIFormula::neg(p), q));
  CHECK(parse_ri("p <-> q") == RIFormula::iff(p, q));
  CHECK(parse_ri("o p & p") == RIFormula::conj(RIFormula::circ(p), p));
  CHECK(parse_box("box box p") ==
        BoxFormula::box(BoxFormula::box(BoxFormula::var("p"))));
  CHECK(parse_ri("p <-> q <-> r") ==
        RIFormula::iff(p, RIFormula::iff(q, r)));
}

TEST_CASE("syntax errors carry offset and expectations") {
  CHECK_THROWS_AS(parse_box(""), SyntaxError);
  CHECK_THROWS_AS(parse_box("p &"), SyntaxError);
  CHECK_THROWS_AS(parse_box("(p"), SyntaxError);
  CHECK_THROWS_AS(parse_box("p q"), SyntaxError);
  CHECK_THROWS_AS(parse_box("P"), SyntaxError);

  try {
    parse_box("p q");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 2);
    CHECK(!e.expected().empty());
  }

  try {
    parse_box("p -> ");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 5);
  }
}

TEST_CASE("each parser rejects the other language's operators") {
  CHECK_THROWS_AS(parse_box("o p"), SyntaxError);
  CHECK_THROWS_AS(parse_box("bullet p"), SyntaxError);
  CHECK_THROWS_AS(parse_box("star p"), SyntaxError);
  CHECK_THROWS_AS(parse_ri("box p"), SyntaxError);
  CHECK_THROWS_AS(parse_ri("dia p"), SyntaxError);

  try {
    parse_ri("p & box q");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("printing") {
  auto p = RIFormula::var("p");
  auto q = RIFormula::var("q");

  CHECK(print_box(BoxFormula::box(BoxFormula::var("p"))) == "box p");
  CHECK(print_ri(RIFormula::neg(RIFormula::circ(p))) == "~(o p)");
  CHECK(print_ri(RIFormula::neg(RIFormula::circ(p)), {.modal_sugar = true}) ==
        "bullet p");
  CHECK(print_ri(RIFormula::conj(p, q)) == "p & q");
  CHECK(print_ri(RIFormula::disj(p, q)) == "p | q");
  CHECK(print_ri(RIFormula::implies(p, q)) == "p -> q");
  CHECK(print_ri(RIFormula::bottom()) == "false");
  CHECK(print_ri(RIFormula::top()) == "true");
  CHECK(print_box(parse_box("box p -> p")) == "box p -> p");
  CHECK(print_ri(parse_ri("(o p & p) -> p")) == "(o p & p) -> p");
  CHECK(print_box(parse_box("dia p"), {.modal_sugar = true}) == "dia p");
  CHECK(print_box(parse_box("dia p")) == "~(box (~p))");
}

TEST_CASE("print then parse is identity on sampled formulas") {
  const char* samples[] = {
      "p",
      "o p & p",
      "star (p | ~q)",
      "bullet (p <-> q) -> (o p | o q)",
      "o (o p & ~(q & p)) & true",
      "false -> star star p",
  };
  for (const char* s : samples) {
    auto f = parse_ri(s);
    CHECK(parse_ri(print_ri(f)) == f);
    CHECK(parse_ri(print_ri(f, {.modal_sugar = true})) == f);
  }
  const char* box_samples[] = {
      "box p -> p",
      "dia (p & q) | box box q",
      "~(box (p -> q)) <-> dia ~q",
  };
  for (const char* s : box_samples) {
    auto f = parse_box(s);
    CHECK(parse_box(print_box(f)) == f);
    CHECK(parse_box(print_box(f, {.modal_sugar = true})) == f);
  }
}

TEST_CASE("substitution is simultaneous") {
  auto f = parse_ri("o p & p");
  std::map<std::string, RIFormula> m{{"p", parse_ri("q & r")}};
  CHECK(substitute(f, m) == parse_ri("o (q & r) & (q & r)"));

  std::map<std::string, RIFormula> m2{{"q", parse_ri("r")}};
  CHECK(substitute(parse_ri("p"), m2) == parse_ri("p"));

  std::map<std::string, RIFormula> m3{{"p", RIFormula::top()}};
  CHECK(substitute(parse_ri("bullet p -> p"), m3) ==
        parse_ri("bullet true -> true"));

  // simultaneous, not sequential: p and q swap cleanly
  std::map<std::string, RIFormula> swap{{"p", parse_ri("q")},
                                        {"q", parse_ri("p")}};
  CHECK(substitute(parse_ri("p & q"), swap) == parse_ri("q & p"));
}

TEST_CASE("circ_translate") {
  CHECK(circ_translate(parse_box("box p")) == parse_ri("o p & p"));
  CHECK(circ_translate(parse_box("p")) == parse_ri("p"));
  CHECK(circ_translate(parse_box("box p -> p")) == parse_ri("(o p & p) -> p"));
  CHECK(circ_translate(parse_box("dia p")) == parse_ri("~(o ~p & ~p)"));
  CHECK(circ_translate(parse_box("true")) == parse_ri("true"));
}

TEST_CASE("circ_translate is a homomorphism on the boolean basis") {
  auto f = parse_box("box (p -> q) & ~box p");
  CHECK(circ_translate(BoxFormula::neg(f)) ==
        RIFormula::neg(circ_translate(f)));
  auto g = parse_box("dia q");
  CHECK(circ_translate(BoxFormula::conj(f, g)) ==
        RIFormula::conj(circ_translate(f), circ_translate(g)));
}

TEST_CASE("circ_translate commutes with substitution") {
  auto f = parse_box("box (p & q) -> box p");
  auto g = parse_box("dia (q -> p)");
  std::map<std::string, BoxFormula> mb{{"p", g}};
  std::map<std::string, RIFormula> mr{{"p", circ_translate(g)}};
  CHECK(circ_translate(substitute(f, mb)) ==
        substitute(circ_translate(f), mr));
}

TEST_CASE("measurements") {
  auto f = parse_ri("o (p & q) -> star p");
  CHECK(f.modal_depth() == 1);
  CHECK(parse_ri("o o o p").modal_depth() == 3);
  CHECK(parse_box("box dia p").modal_depth() == 2);
  CHECK(parse_ri("p").node_count() == 1);
  CHECK(parse_ri("o p & p").node_count() == 4);
  CHECK(f.variables() == std::set<std::string>{"p", "q"});
  CHECK(RIFormula::top().variables().empty());
}
