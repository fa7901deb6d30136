#include "riml/decide.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <set>
#include <thread>
#include <type_traits>

#include "riml/enumerate.hpp"
#include "riml/nodepool.hpp"

namespace riml {

std::vector<Frame> enumerate_frames(int n, StepBudget& budget) {
  std::vector<Frame> out;
  const auto worlds = canonical_worlds(n);
  for_each_relation(n, budget, [&](const std::uint64_t* succ) {
    out.push_back(Frame(worlds, {}).with_succ_masks(
        std::vector<std::uint64_t>(succ, succ + n)));
    return true;
  });
  return out;
}

std::vector<Frame> enumerate_frames(int n) {
  StepBudget budget;
  return enumerate_frames(n, budget);
}

bool query_member(int n, const std::uint64_t* succ, const ClassQuery& q) {
  if (!q.mirror_closed) return class_member(n, succ, q.base);
  // mirror-related to a member: some diagonal completion of the
  // irreflexive part lies in the base class
  std::uint64_t cand[8];
  for (std::uint64_t d = 0; d < (1ull << n); ++d) {
    for (int i = 0; i < n; ++i) {
      cand[i] = (succ[i] & ~(1ull << i)) | (((d >> i) & 1) << i);
    }
    if (class_member(n, cand, q.base)) return true;
  }
  return false;
}

bool query_member(const Frame& f, const ClassQuery& q) {
  return query_member(f.size(), f.succ_masks().data(), q);
}

namespace {

struct Hit {
  std::uint64_t order = UINT64_MAX;  // global enumeration index
  int n = 0;
  std::uint64_t rel = 0;
  int world = 0;
  std::uint64_t val_idx = 0;
};

struct Shared {
  explicit Shared(std::size_t count)
      : hits(count), best(count), undecided(count) {
    for (auto& b : best) b.store(UINT64_MAX, std::memory_order_relaxed);
  }
  std::vector<Hit> hits;  // guarded by mu
  std::vector<std::atomic<std::uint64_t>> best;
  std::size_t undecided;  // guarded by mu
  std::atomic<std::uint64_t> stop_after{UINT64_MAX};
  std::mutex mu;
};

void merge_hit(Shared& sh, std::size_t i, const Hit& h) {
  std::lock_guard<std::mutex> g(sh.mu);
  if (h.order >= sh.hits[i].order) return;
  bool first = sh.hits[i].order == UINT64_MAX;
  sh.hits[i] = h;
  sh.best[i].store(h.order, std::memory_order_relaxed);
  if (first && --sh.undecided == 0) {
    // every formula now has some countermodel; frames past the worst one
    // cannot improve any minimum
    std::uint64_t mx = 0;
    for (const auto& hit : sh.hits) mx = std::max(mx, hit.order);
    sh.stop_after.store(mx, std::memory_order_relaxed);
  }
}

void run_stripe(const NodePool& pool, const std::vector<std::int32_t>& roots,
                const ClassQuery& q, StepBudget& budget, Shared& sh,
                int worker, int workers) {
  const int v = static_cast<int>(pool.vars().size());
  const std::size_t count = roots.size();
  std::vector<std::uint64_t> masks(pool.size());
  std::vector<std::uint64_t> var_masks(std::max(v, 1));
  std::vector<int> bw(count);
  std::vector<std::uint64_t> bv(count);
  std::vector<std::size_t> live;
  live.reserve(count);

  std::uint64_t order_base = 0;
  for (int n = 1; n <= q.max_world_count;
       order_base += 1ull << (n * n), ++n) {
    const int bits = v * n;
    if (bits > 62) {
      throw BudgetExceeded("valuation space too large: 2^" +
                           std::to_string(bits));
    }
    const std::uint64_t all = (1ull << n) - 1;
    const std::uint64_t total = 1ull << (n * n);
    std::uint64_t succ[8];
    for (std::uint64_t r = worker; r < total;
         r += static_cast<std::uint64_t>(workers)) {
      const std::uint64_t t = order_base + r;
      if (t > sh.stop_after.load(std::memory_order_relaxed)) return;
      budget.charge(1);
      for (int i = 0; i < n; ++i) succ[i] = (r >> (i * n)) & all;
      if (!query_member(n, succ, q)) continue;
      live.clear();
      for (std::size_t i = 0; i < count; ++i) {
        if (sh.best[i].load(std::memory_order_relaxed) > t) live.push_back(i);
      }
      if (live.empty()) continue;
      budget.charge(std::max<std::uint64_t>(1, (1ull << bits) >> 8));
      for (std::size_t i : live) bw[i] = n;
      std::size_t open = live.size();
      for (std::uint64_t idx = 0; idx < (1ull << bits) && open; ++idx) {
        for (int s = 0; s < v; ++s) var_masks[s] = (idx >> (s * n)) & all;
        pool.eval(n, succ, var_masks.data(), masks.data());
        for (std::size_t i : live) {
          if (bw[i] == 0) continue;
          std::uint64_t fail = all & ~masks[roots[i]];
          if (!fail) continue;
          int w = std::countr_zero(fail);
          if (w < bw[i]) {
            bw[i] = w;
            bv[i] = idx;
            if (w == 0) --open;
          }
        }
      }
      for (std::size_t i : live) {
        if (bw[i] < n) merge_hit(sh, i, Hit{t, n, r, bw[i], bv[i]});
      }
    }
  }
}

Valuation decode_pool_valuation(const Frame& fr, const NodePool& pool,
                                const std::set<std::string>& keep,
                                std::uint64_t idx) {
  const int n = fr.size();
  Valuation out;
  const auto& vars = pool.vars();
  for (std::size_t s = 0; s < vars.size(); ++s) {
    if (keep.count(vars[s]) == 0) continue;
    std::uint64_t mask = (idx >> (s * n)) & ((1ull << n) - 1);
    std::vector<std::string> ws;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1) ws.push_back(fr.world(i));
    }
    out[vars[s]] = std::move(ws);
  }
  return out;
}

std::vector<ValidityReport> scan_many(
    const NodePool& pool, const std::vector<std::int32_t>& roots,
    const std::vector<std::set<std::string>>& fvars, const ClassQuery& q,
    StepBudget& budget, int workers) {
  if (q.max_world_count < 1) {
    throw InputError("max world count must be at least 1");
  }
  if (q.max_world_count > 7) {
    throw BudgetExceeded("validity search supports at most 7 worlds");
  }
  if (workers < 1) throw InputError("worker count must be at least 1");
  const std::size_t count = roots.size();
  if (count == 0) return {};

  Shared sh(count);
  if (workers == 1) {
    run_stripe(pool, roots, q, budget, sh, 0, 1);
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    threads.reserve(workers);
    for (int k = 0; k < workers; ++k) {
      threads.emplace_back([&, k] {
        try {
          run_stripe(pool, roots, q, budget, sh, k, workers);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
    }
    for (auto& th : threads) th.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  // frames_checked is recomputed in one sequential membership pass so the
  // counts do not depend on scheduling
  std::vector<std::pair<std::uint64_t, std::size_t>> decided;
  for (std::size_t i = 0; i < count; ++i) {
    if (sh.hits[i].order != UINT64_MAX) decided.push_back({sh.hits[i].order, i});
  }
  std::sort(decided.begin(), decided.end());
  const bool need_total = decided.size() < count;
  std::vector<std::uint64_t> checked(count, 0);
  std::uint64_t members = 0;
  std::size_t di = 0;
  std::uint64_t order_base = 0;
  std::uint64_t succ[8];
  for (int n = 1; n <= q.max_world_count;
       order_base += 1ull << (n * n), ++n) {
    const std::uint64_t all = (1ull << n) - 1;
    const std::uint64_t total = 1ull << (n * n);
    for (std::uint64_t r = 0; r < total; ++r) {
      if (!need_total && di == decided.size()) break;
      for (int i = 0; i < n; ++i) succ[i] = (r >> (i * n)) & all;
      if (!query_member(n, succ, q)) continue;
      ++members;
      const std::uint64_t t = order_base + r;
      while (di < decided.size() && decided[di].first == t) {
        checked[decided[di].second] = members;
        ++di;
      }
    }
  }

  std::vector<ValidityReport> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Hit& h = sh.hits[i];
    if (h.order == UINT64_MAX) {
      out[i].valid = true;
      out[i].frames_checked = members;
    } else {
      Frame fr = frame_from_bits(h.n, h.rel);
      Valuation val = decode_pool_valuation(fr, pool, fvars[i], h.val_idx);
      std::string world = fr.world(h.world);
      out[i].countermodel = Countermodel{std::move(fr), std::move(val),
                                         std::move(world)};
      out[i].frames_checked = checked[i];
    }
  }
  return out;
}

template <typename F>
std::vector<ValidityReport> many_impl(const std::vector<F>& fs,
                                      const ClassQuery& q, StepBudget& budget,
                                      int workers) {
  NodePool pool;
  std::set<std::string> all_vars;
  std::vector<std::set<std::string>> fvars;
  fvars.reserve(fs.size());
  for (const auto& f : fs) {
    fvars.push_back(f.variables());
    all_vars.insert(fvars.back().begin(), fvars.back().end());
  }
  for (const auto& v : all_vars) pool.var_slot(v);  // lexicographic slots
  std::vector<std::int32_t> roots;
  roots.reserve(fs.size());
  for (const auto& f : fs) roots.push_back(pool.add(f));
  return scan_many(pool, roots, fvars, q, budget, workers);
}

}  // namespace

std::vector<ValidityReport> valid_over_class_many(
    const std::vector<RIFormula>& fs, const ClassQuery& q, StepBudget& budget,
    int workers) {
  return many_impl(fs, q, budget, workers);
}

std::vector<ValidityReport> valid_over_class_many(
    const std::vector<BoxFormula>& fs, const ClassQuery& q, StepBudget& budget,
    int workers) {
  return many_impl(fs, q, budget, workers);
}

ValidityReport valid_over_class(const RIFormula& f, const ClassQuery& q,
                                StepBudget& budget, int workers) {
  return many_impl(std::vector<RIFormula>{f}, q, budget, workers)[0];
}

ValidityReport valid_over_class(const BoxFormula& f, const ClassQuery& q,
                                StepBudget& budget, int workers) {
  return many_impl(std::vector<BoxFormula>{f}, q, budget, workers)[0];
}

ValidityReport valid_over_class(const RIFormula& f, const ClassQuery& q) {
  StepBudget budget;
  return valid_over_class(f, q, budget);
}

ValidityReport valid_over_class(const BoxFormula& f, const ClassQuery& q) {
  StepBudget budget;
  return valid_over_class(f, q, budget);
}

namespace {

template <typename F>
ClassComparison compare_impl(const F& f, const ClassQuery& q1,
                             const ClassQuery& q2, StepBudget& budget) {
  ClassComparison out;
  out.first = valid_over_class(f, q1, budget);
  out.second = valid_over_class(f, q2, budget);
  out.agree = out.first.valid == out.second.valid;
  return out;
}

}  // namespace

ClassComparison compare_class_validity(const RIFormula& f,
                                       const ClassQuery& q1,
                                       const ClassQuery& q2,
                                       StepBudget& budget) {
  return compare_impl(f, q1, q2, budget);
}

ClassComparison compare_class_validity(const BoxFormula& f,
                                       const ClassQuery& q1,
                                       const ClassQuery& q2,
                                       StepBudget& budget) {
  return compare_impl(f, q1, q2, budget);
}

ClassComparison compare_class_validity(const RIFormula& f,
                                       const ClassQuery& q1,
                                       const ClassQuery& q2) {
  StepBudget budget;
  return compare_impl(f, q1, q2, budget);
}

ClassComparison compare_class_validity(const BoxFormula& f,
                                       const ClassQuery& q1,
                                       const ClassQuery& q2) {
  StepBudget budget;
  return compare_impl(f, q1, q2, budget);
}

namespace {

template <typename F>
struct ModalOf;
template <>
struct ModalOf<RIFormula> {
  static RIFormula apply(const RIFormula& f) { return RIFormula::circ(f); }
};
template <>
struct ModalOf<BoxFormula> {
  static BoxFormula apply(const BoxFormula& f) { return BoxFormula::box(f); }
};

template <typename F>
std::vector<F> generate_corpus(int max_size, int max_depth,
                               bool include_star) {
  struct Entry {
    F f;
    int depth;
  };
  std::vector<std::vector<Entry>> by_size(std::max(max_size, 0) + 1);
  if (max_size >= 1) {
    by_size[1].push_back({F::var("p"), 0});
    by_size[1].push_back({F::var("q"), 0});
  }
  for (int s = 2; s <= max_size; ++s) {
    auto& bucket = by_size[s];
    for (const auto& e : by_size[s - 1]) {
      bucket.push_back({F::neg(e.f), e.depth});
    }
    for (const auto& e : by_size[s - 1]) {
      if (e.depth < max_depth) {
        bucket.push_back({ModalOf<F>::apply(e.f), e.depth + 1});
      }
    }
    if constexpr (std::is_same_v<F, RIFormula>) {
      if (include_star) {
        for (const auto& e : by_size[s - 1]) {
          if (e.depth < max_depth) {
            bucket.push_back({F::star(e.f), e.depth + 1});
          }
        }
      }
    }
    for (int ls = 1; ls <= s - 2; ++ls) {
      for (const auto& l : by_size[ls]) {
        for (const auto& r : by_size[s - 1 - ls]) {
          bucket.push_back({F::conj(l.f, r.f), std::max(l.depth, r.depth)});
        }
      }
    }
  }
  std::vector<F> out;
  for (int s = 1; s <= max_size; ++s) {
    for (const auto& e : by_size[s]) out.push_back(e.f);
  }
  return out;
}

}  // namespace

std::vector<RIFormula> generate_ri_formulas(int max_size, int max_depth,
                                            bool include_star) {
  auto out = generate_corpus<RIFormula>(max_size, max_depth, include_star);
  std::set<std::string> seen;
  for (const auto& f : out) seen.insert(print_ri(f));
  auto push = [&](const RIFormula& f) {
    if (seen.insert(print_ri(f)).second) out.push_back(f);
  };
  const RIFormula args[] = {RIFormula::var("p"), RIFormula::var("q"),
                            RIFormula::top()};
  push(RIFormula::circ(RIFormula::top()));
  for (const auto& a : args) {
    push(RIFormula::implies(RIFormula::bullet(a), a));
  }
  for (const auto& a : args) {
    for (const auto& b : args) {
      push(RIFormula::implies(
          RIFormula::conj(RIFormula::circ(a), RIFormula::circ(b)),
          RIFormula::circ(RIFormula::conj(a, b))));
    }
  }
  return out;
}

std::vector<BoxFormula> generate_box_formulas(int max_size, int max_depth) {
  return generate_corpus<BoxFormula>(max_size, max_depth, false);
}

Json validity_report_to_json(const ValidityReport& r) {
  Json j;
  j["verdict"] = r.valid ? "valid_up_to_bound" : "countermodel";
  if (r.countermodel) {
    Json c = model_to_json(
        Model(r.countermodel->frame, r.countermodel->valuation));
    c["world"] = r.countermodel->world;
    j["countermodel"] = std::move(c);
  }
  j["frames_checked"] = r.frames_checked;
  return j;
}

}  // namespace riml
