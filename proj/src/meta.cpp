#include "riml/meta.hpp"

#include <bit>

#include "riml/nodepool.hpp"

namespace riml {

namespace {

bool contains_star(const RIFormula& f) {
  switch (f.op()) {
    case RIOp::Star:
      return true;
    case RIOp::Neg:
    case RIOp::Circ:
      return contains_star(f.child());
    case RIOp::And:
      return contains_star(f.left()) || contains_star(f.right());
    default:
      return false;
  }
}

std::string val_text(int n, const Frame& fr, const std::uint64_t* vm,
                     const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t s = 0; s < vars.size(); ++s) {
    if (s) out += ", ";
    out += vars[s] + "={";
    bool first = true;
    for (int j = 0; j < n; ++j) {
      if ((vm[s] >> j) & 1) {
        if (!first) out += ",";
        out += fr.world(j);
        first = false;
      }
    }
    out += "}";
  }
  return out;
}

struct MirrorScan {
  std::uint64_t checks = 0;
  std::uint64_t mismatches = 0;
  std::string first;
};

/// Pointwise truth of every corpus formula, each frame against each of
/// its proper mirror reductions, all valuations over the pool variables.
MirrorScan mirror_scan(const std::vector<RIFormula>& corpus, int max_worlds) {
  MirrorScan out;
  NodePool pool;
  pool.var_slot("p");
  pool.var_slot("q");
  std::vector<std::int32_t> roots;
  roots.reserve(corpus.size());
  for (const auto& f : corpus) roots.push_back(pool.add(f));
  const int nvars = static_cast<int>(pool.vars().size());
  std::vector<std::uint64_t> base(pool.size()), red(pool.size());
  std::vector<std::uint64_t> vm(nvars);
  for (int n = 1; n <= max_worlds; ++n) {
    const std::uint64_t full = (1ull << n) - 1;
    for (const Frame& fr : enumerate_frames(n)) {
      const std::vector<Frame> reds = mirror_reductions(fr);
      if (reds.size() == 1) continue;
      for (std::uint64_t idx = 0; idx < (1ull << (nvars * n)); ++idx) {
        for (int s = 0; s < nvars; ++s) vm[s] = (idx >> (s * n)) & full;
        pool.eval(n, fr.succ_masks().data(), vm.data(), base.data());
        for (std::size_t k = 1; k < reds.size(); ++k) {
          pool.eval(n, reds[k].succ_masks().data(), vm.data(), red.data());
          for (std::size_t r = 0; r < roots.size(); ++r) {
            out.checks += n;
            const std::uint64_t diff =
                (base[roots[r]] ^ red[roots[r]]) & full;
            if (diff) {
              out.mismatches += std::popcount(diff);
              if (out.first.empty()) {
                out.first = "\"" + print_ri(corpus[r]) + "\" at " +
                            fr.world(std::countr_zero(diff)) + " with " +
                            val_text(n, fr, vm.data(), pool.vars()) +
                            " on " + frame_to_json(fr).dump() +
                            " against " + frame_to_json(reds[k]).dump();
              }
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

MetaResult run_mirror_invariance(int max_worlds, int max_depth) {
  MetaResult res;
  res.name = "mirror-invariance";
  const MirrorScan circ =
      mirror_scan(generate_ri_formulas(7, max_depth), max_worlds);
  res.instances = circ.checks;
  res.violations = circ.mismatches;
  res.pass = circ.mismatches == 0;
  if (!circ.first.empty()) {
    res.notes.push_back("first violation: " + circ.first);
  }

  // Star is not mirror-invariant; surveyed at small bounds, never asserted.
  std::vector<RIFormula> star;
  for (const auto& f : generate_ri_formulas(5, 2, true)) {
    if (contains_star(f)) star.push_back(f);
  }
  const int star_bound = std::min(max_worlds, 2);
  const MirrorScan s = mirror_scan(star, star_bound);
  res.notes.push_back(
      "star survey (informational, not asserted): " +
      std::to_string(s.mismatches) + " of " + std::to_string(s.checks) +
      " pointwise checks differ across mirror reductions up to " +
      std::to_string(star_bound) + " worlds");
  if (!s.first.empty()) res.notes.push_back("star example: " + s.first);
  return res;
}

MetaResult run_bridge(int max_worlds, int max_depth) {
  MetaResult res;
  res.name = "bridge";
  NodePool box_pool, ri_pool;
  for (NodePool* pool : {&box_pool, &ri_pool}) {
    pool->var_slot("p");
    pool->var_slot("q");
  }
  const std::vector<BoxFormula> corpus = generate_box_formulas(7, max_depth);
  std::vector<std::int32_t> box_roots, ri_roots;
  for (const auto& f : corpus) {
    box_roots.push_back(box_pool.add(f));
    ri_roots.push_back(ri_pool.add(circ_translate(f)));
  }
  std::vector<std::uint64_t> out_box(box_pool.size()), out_ri(ri_pool.size());
  std::uint64_t vm[2];
  for (int n = 1; n <= max_worlds; ++n) {
    const std::uint64_t full = (1ull << n) - 1;
    for (const Frame& fr : enumerate_frames(n)) {
      const Frame closed = reflexive_closure(fr);
      for (std::uint64_t idx = 0; idx < (1ull << (2 * n)); ++idx) {
        vm[0] = idx & full;
        vm[1] = (idx >> n) & full;
        ri_pool.eval(n, fr.succ_masks().data(), vm, out_ri.data());
        box_pool.eval(n, closed.succ_masks().data(), vm, out_box.data());
        for (std::size_t r = 0; r < corpus.size(); ++r) {
          res.instances += n;
          const std::uint64_t diff =
              (out_ri[ri_roots[r]] ^ out_box[box_roots[r]]) & full;
          if (diff) {
            res.violations += std::popcount(diff);
            if (res.notes.empty()) {
              res.notes.push_back(
                  "first violation: \"" + print_box(corpus[r]) + "\" at " +
                  fr.world(std::countr_zero(diff)) + " with " +
                  val_text(n, fr, vm, box_pool.vars()) + " on " +
                  frame_to_json(fr).dump());
            }
          }
        }
      }
    }
  }
  res.pass = res.violations == 0;
  return res;
}

MetaResult run_comp_t(int max_worlds, int workers, int max_depth) {
  MetaResult res;
  res.name = "compT";
  const std::vector<RIFormula> corpus = generate_ri_formulas(7, max_depth);
  const ClassQuery over_all{FrameClass::Kind::All, false, max_worlds};
  const ClassQuery over_refl{FrameClass::Kind::Reflexive, false, max_worlds};
  StepBudget budget_all(500'000'000), budget_refl(500'000'000);
  const auto all = valid_over_class_many(corpus, over_all, budget_all, workers);
  const auto refl =
      valid_over_class_many(corpus, over_refl, budget_refl, workers);
  res.instances = corpus.size();
  std::uint64_t valid_count = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    valid_count += all[i].valid;
    if (all[i].valid != refl[i].valid) {
      ++res.violations;
      if (res.notes.empty()) {
        res.notes.push_back("first disagreement: \"" + print_ri(corpus[i]) +
                            "\" all=" +
                            (all[i].valid ? "valid" : "countermodel") +
                            " reflexive=" +
                            (refl[i].valid ? "valid" : "countermodel"));
      }
    }
  }
  res.pass = res.violations == 0;
  res.notes.push_back(std::to_string(valid_count) + " of " +
                      std::to_string(corpus.size()) +
                      " corpus formulas valid over both classes up to " +
                      std::to_string(max_worlds) + " worlds");
  return res;
}

MetaResult run_soundness(int max_worlds, int workers) {
  MetaResult res;
  res.name = "soundness";
  using R = RIFormula;
  using B = BoxFormula;
  const R p = R::var("p");
  const R q = R::var("q");
  const std::vector<R> atoms = {p, q, R::top()};

  std::vector<R> fs;
  fs.push_back(R::circ(R::top()));
  for (const R& a : atoms) fs.push_back(R::implies(R::bullet(a), a));
  for (const R& a : atoms) {
    for (const R& b : atoms) {
      fs.push_back(R::implies(R::conj(R::circ(a), R::circ(b)),
                              R::circ(R::conj(a, b))));
    }
  }
  const B bp = B::var("p");
  const B bq = B::var("q");
  fs.push_back(circ_translate(B::implies(B::box(B::implies(bp, bq)),
                                         B::implies(B::box(bp), B::box(bq)))));
  fs.push_back(R::implies(R::disj(R::conj(R::circ(p), p),
                                  R::conj(R::circ(q), q)),
                          R::circ(R::disj(p, q))));
  fs.push_back(R::disj(p, R::circ(p)));
  fs.push_back(R::implies(p, R::implies(R::circ(R::implies(p, q)),
                                        R::implies(R::circ(p), R::circ(q)))));

  StepBudget budget(500'000'000);
  const ClassQuery query{FrameClass::Kind::All, false, max_worlds};
  const auto reports = valid_over_class_many(fs, query, budget, workers);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    res.instances += reports[i].frames_checked;
    if (!reports[i].valid) {
      ++res.violations;
      res.notes.push_back("countermodel for \"" + print_ri(fs[i]) + "\"");
    }
  }
  res.pass = res.violations == 0;
  res.notes.push_back(std::to_string(fs.size()) +
                      " formulas checked over all frames up to " +
                      std::to_string(max_worlds) + " worlds");
  return res;
}

const std::vector<std::string>& meta_suite_names() {
  static const std::vector<std::string> names = {"mirror-invariance",
                                                 "bridge", "compT",
                                                 "soundness"};
  return names;
}

MetaResult run_meta_suite(const std::string& name, int max_worlds,
                          int workers, int max_depth) {
  if (name == "mirror-invariance") {
    return run_mirror_invariance(max_worlds > 0 ? max_worlds : 3, max_depth);
  }
  if (name == "bridge") {
    return run_bridge(max_worlds > 0 ? max_worlds : 3, max_depth);
  }
  if (name == "compT") {
    return run_comp_t(max_worlds > 0 ? max_worlds : kDefaultMaxWorlds,
                      workers, max_depth);
  }
  if (name == "soundness") {
    return run_soundness(max_worlds > 0 ? max_worlds : 4, workers);
  }
  throw InputError(
      "unknown meta suite: " + name +
      " (expected mirror-invariance, bridge, compT or soundness)");
}

Json meta_result_to_json(const MetaResult& r) {
  Json out;
  out["suite"] = r.name;
  out["pass"] = r.pass;
  out["instances"] = r.instances;
  out["violations"] = r.violations;
  out["notes"] = r.notes;
  return out;
}

}  // namespace riml
