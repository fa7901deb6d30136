#ifndef RIML_META_HPP
#define RIML_META_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "riml/decide.hpp"
#include "riml/frames.hpp"
#include "riml/json_io.hpp"
#include "riml/proof.hpp"

namespace riml {

/// Outcome of one exhaustive property suite. instances counts the
/// pointwise checks performed; witnesses for the first violation and any
/// informational observations land in notes.
struct MetaResult {
  std::string name;
  bool pass = false;
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> notes;
};

/// Circle-language truth is blind to mirror reduction: for every frame up
/// to the bound, every mirror reduction, every valuation over {p, q},
/// every corpus formula (modal depth <= max_depth) and every world, truth
/// values coincide. Star formulas are surveyed separately and reported in
/// notes, never asserted.
MetaResult run_mirror_invariance(int max_worlds = 3, int max_depth = 3);

/// The circle translation bridges the two semantics: M, x |= translate(a)
/// iff a holds at x in the reflexive closure of M, exhaustively at the
/// same bounds over the box corpus.
MetaResult run_bridge(int max_worlds = 3, int max_depth = 3);

/// All frames and reflexive frames validate the same circle formulas:
/// valid_over_class verdicts agree on the whole corpus at the bound.
MetaResult run_comp_t(int max_worlds = kDefaultMaxWorlds, int workers = 1,
                      int max_depth = 3);

/// Every axiom instance over atomic arguments, the translated K schema
/// and the three stock theorems are valid over all frames at the bound.
MetaResult run_soundness(int max_worlds = 4, int workers = 1);

/// Suite registry for the command line: mirror-invariance, bridge, compT,
/// soundness. max_worlds = 0 picks the suite's default bound. InputError
/// on an unknown name.
const std::vector<std::string>& meta_suite_names();
MetaResult run_meta_suite(const std::string& name, int max_worlds = 0,
                          int workers = 1, int max_depth = 3);

Json meta_result_to_json(const MetaResult& r);

}  // namespace riml

#endif
