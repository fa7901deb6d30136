#include "doctest.h"
#include "riml/meta.hpp"

using namespace riml;

TEST_CASE("mirror invariance suite passes") {
  MetaResult r = run_mirror_invariance(3);
  CHECK(r.name == "mirror-invariance");
  CHECK(r.pass);
  CHECK(r.violations == 0);
  CHECK(r.instances > 1'000'000);
  // The star survey is informational and must surface a real divergence.
  REQUIRE(r.notes.size() == 2);
  CHECK(r.notes[0].find("star survey") == 0);
  CHECK(r.notes[0].find(" 0 of ") == std::string::npos);
  CHECK(r.notes[1].find("star example: ") == 0);
}

TEST_CASE("bridge suite passes") {
  MetaResult r = run_bridge(3);
  CHECK(r.name == "bridge");
  CHECK(r.pass);
  CHECK(r.violations == 0);
  CHECK(r.instances > 1'000'000);
  CHECK(r.notes.empty());
}

TEST_CASE("all and reflexive frames validate the same circle formulas") {
  MetaResult r = run_comp_t(3);
  CHECK(r.name == "compT");
  CHECK(r.pass);
  CHECK(r.violations == 0);
  CHECK(r.instances == generate_ri_formulas().size());
  REQUIRE(r.notes.size() == 1);
  CHECK(r.notes[0].find("valid over both classes") != std::string::npos);
}

TEST_CASE("axioms and stock theorems are valid over all frames") {
  MetaResult r = run_soundness(4);
  CHECK(r.name == "soundness");
  CHECK(r.pass);
  CHECK(r.violations == 0);
  // 17 formulas, each checked on every frame with at most 4 worlds.
  const std::uint64_t members = 2 + 16 + 512 + 65536;
  CHECK(r.instances == 17 * members);
  REQUIRE(r.notes.size() == 1);
  CHECK(r.notes[0] == "17 formulas checked over all frames up to 4 worlds");
}

TEST_CASE("suite registry dispatches by name") {
  CHECK(meta_suite_names() ==
        std::vector<std::string>{"mirror-invariance", "bridge", "compT",
                                 "soundness"});
  MetaResult r = run_meta_suite("mirror-invariance", 2);
  CHECK(r.name == "mirror-invariance");
  CHECK(r.pass);
  CHECK(run_meta_suite("bridge", 2).pass);
  CHECK_THROWS_AS(run_meta_suite("nope"), InputError);
}

TEST_CASE("meta results serialize") {
  MetaResult r;
  r.name = "bridge";
  r.pass = true;
  r.instances = 3;
  r.violations = 0;
  r.notes.push_back("a");
  CHECK(meta_result_to_json(r).dump() ==
        "{\"suite\":\"bridge\",\"pass\":true,\"instances\":3,"
        "\"violations\":0,\"notes\":[\"a\"]}");
}

TEST_CASE("mirror related frames validate the same circle formulas") {
  const auto corpus = generate_ri_formulas(5, 2);
  const auto frames = enumerate_frames(2);
  for (const Frame& a : frames) {
    for (const Frame& b : frames) {
      if (a == b || !mirror_related(a, b)) continue;
      for (const RIFormula& f : corpus) {
        CAPTURE(print_ri(f));
        CHECK(frame_valid(a, f).holds == frame_valid(b, f).holds);
      }
    }
  }
}
