#ifndef RIML_DECIDE_HPP
#define RIML_DECIDE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "riml/common.hpp"
#include "riml/formula.hpp"
#include "riml/frames.hpp"
#include "riml/json_io.hpp"
#include "riml/kripke.hpp"

namespace riml {

/// All 2^(n*n) frames on worlds w1..wn, in ascending relation-bitmask
/// order (bit i*n+j = pair (w_{i+1}, w_{j+1})).
std::vector<Frame> enumerate_frames(int n, StepBudget& budget);
std::vector<Frame> enumerate_frames(int n);

/// A bounded frame-class query. mirror_closed widens the base class to
/// every frame mirror-related to a member: the class that the circle
/// language cannot tell apart from the base.
struct ClassQuery {
  FrameClass base{FrameClass::Kind::All};
  bool mirror_closed = false;
  int max_world_count = kDefaultMaxWorlds;
};

bool query_member(int n, const std::uint64_t* succ, const ClassQuery& q);
bool query_member(const Frame& f, const ClassQuery& q);

struct Countermodel {
  Frame frame;
  Valuation valuation;
  std::string world;
};

/// Outcome of a bounded validity search. valid always means "valid up to
/// the query bound", never unbounded validity. frames_checked counts the
/// class members the formula was checked on, up to and including the
/// decisive one. The first countermodel in (frame, world, valuation)
/// enumeration order is returned, independent of the worker count.
struct ValidityReport {
  bool valid = false;
  std::optional<Countermodel> countermodel;
  std::uint64_t frames_checked = 0;
};

ValidityReport valid_over_class(const RIFormula& f, const ClassQuery& q,
                                StepBudget& budget, int workers = 1);
ValidityReport valid_over_class(const BoxFormula& f, const ClassQuery& q,
                                StepBudget& budget, int workers = 1);
ValidityReport valid_over_class(const RIFormula& f, const ClassQuery& q);
ValidityReport valid_over_class(const BoxFormula& f, const ClassQuery& q);

/// Batch variant: one shared scan over the frame space decides the whole
/// list. Reports are positionally aligned with the input and identical
/// for every worker count; only the budget meter varies with scheduling.
std::vector<ValidityReport> valid_over_class_many(
    const std::vector<RIFormula>& fs, const ClassQuery& q, StepBudget& budget,
    int workers = 1);
std::vector<ValidityReport> valid_over_class_many(
    const std::vector<BoxFormula>& fs, const ClassQuery& q, StepBudget& budget,
    int workers = 1);

struct ClassComparison {
  bool agree = false;
  ValidityReport first;
  ValidityReport second;
};

ClassComparison compare_class_validity(const RIFormula& f,
                                       const ClassQuery& q1,
                                       const ClassQuery& q2,
                                       StepBudget& budget);
ClassComparison compare_class_validity(const BoxFormula& f,
                                       const ClassQuery& q1,
                                       const ClassQuery& q2,
                                       StepBudget& budget);
ClassComparison compare_class_validity(const RIFormula& f,
                                       const ClassQuery& q1,
                                       const ClassQuery& q2);
ClassComparison compare_class_validity(const BoxFormula& f,
                                       const ClassQuery& q1,
                                       const ClassQuery& q2);

/// Property-suite corpora: every formula over {p, q} built from negation,
/// conjunction and the modality within the size and modal-depth bounds,
/// in a fixed deterministic order (by size, then negations, modalities,
/// conjunctions). The circle corpus appends the instances of the three
/// circle axiom schemata with arguments among p, q, true; duplicates of
/// generated formulas are dropped.
std::vector<RIFormula> generate_ri_formulas(int max_size = 7,
                                            int max_depth = 3,
                                            bool include_star = false);
std::vector<BoxFormula> generate_box_formulas(int max_size = 7,
                                              int max_depth = 3);

Json validity_report_to_json(const ValidityReport& r);

}  // namespace riml

#endif
