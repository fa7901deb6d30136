#include "riml/kripke.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <type_traits>

#include "riml/nodepool.hpp"

namespace riml {

// ---------- Frame ----------

Frame::Frame(std::vector<std::string> worlds,
             std::vector<std::pair<std::string, std::string>> rel)
    : worlds_(std::move(worlds)) {
  if (worlds_.empty()) throw InputError("frame needs at least one world");
  if (worlds_.size() > 64) throw InputError("at most 64 worlds supported");
  for (std::size_t i = 0; i < worlds_.size(); ++i) {
    if (worlds_[i].empty()) throw InputError("empty world name");
    for (std::size_t j = i + 1; j < worlds_.size(); ++j) {
      if (worlds_[i] == worlds_[j])
        throw InputError("duplicate world: " + worlds_[i]);
    }
  }
  succ_.assign(worlds_.size(), 0);
  for (const auto& [a, b] : rel) {
    int i = require(a);
    int j = require(b);
    std::uint64_t bit = 1ull << j;
    if (succ_[i] & bit)
      throw InputError("duplicate relation pair: (" + a + ", " + b + ")");
    succ_[i] |= bit;
  }
}

int Frame::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < worlds_.size(); ++i) {
    if (worlds_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

int Frame::require(std::string_view name) const {
  int i = index_of(name);
  if (i < 0) throw UnknownWorld(std::string(name));
  return i;
}

std::vector<std::pair<int, int>> Frame::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      if (related(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> Frame::pair_names() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [i, j] : pairs()) out.emplace_back(worlds_[i], worlds_[j]);
  return out;
}

Frame Frame::with_relation(const std::vector<std::pair<int, int>>& rel) const {
  Frame f;
  f.worlds_ = worlds_;
  f.succ_.assign(worlds_.size(), 0);
  for (auto [i, j] : rel) {
    assert(i >= 0 && i < size() && j >= 0 && j < size());
    f.succ_[i] |= 1ull << j;
  }
  return f;
}

Frame Frame::with_succ_masks(std::vector<std::uint64_t> succ) const {
  assert(succ.size() == worlds_.size());
  Frame f;
  f.worlds_ = worlds_;
  f.succ_ = std::move(succ);
  return f;
}

bool Frame::same_world_set(const Frame& o) const {
  if (worlds_.size() != o.worlds_.size()) return false;
  for (const auto& w : worlds_) {
    if (o.index_of(w) < 0) return false;
  }
  return true;
}

// ---------- Model ----------

Model::Model(Frame frame, const Valuation& val) : frame_(std::move(frame)) {
  for (const auto& [var, worlds] : val) {
    if (!valid_identifier(var))
      throw InputError("bad variable name in valuation: " + var);
    std::uint64_t mask = 0;
    for (const auto& w : worlds) {
      int i = frame_.require(w);
      if (mask & (1ull << i))
        throw InputError("duplicate world in valuation of " + var + ": " + w);
      mask |= 1ull << i;
    }
    val_[var] = mask;
  }
}

std::uint64_t Model::extension(const std::string& var) const {
  auto it = val_.find(var);
  return it == val_.end() ? 0 : it->second;
}

Valuation Model::valuation() const {
  Valuation out;
  for (const auto& [var, mask] : val_) {
    std::vector<std::string> ws;
    for (int i = 0; i < frame_.size(); ++i) {
      if ((mask >> i) & 1) ws.push_back(frame_.world(i));
    }
    out[var] = std::move(ws);
  }
  return out;
}

// ---------- evaluation ----------

namespace {

bool all_successors(const Model& m, int w, auto&& pred) {
  std::uint64_t s = m.frame().successors(w);
  while (s) {
    int u = std::countr_zero(s);
    s &= s - 1;
    if (!pred(u)) return false;
  }
  return true;
}

}  // namespace

bool eval_box(const Model& m, int w, const BoxFormula& f) {
  switch (f.op()) {
    case BoxOp::Var:
      return (m.extension(f.name()) >> w) & 1;
    case BoxOp::Top:
      return true;
    case BoxOp::Neg:
      return !eval_box(m, w, f.child());
    case BoxOp::And:
      return eval_box(m, w, f.left()) && eval_box(m, w, f.right());
    case BoxOp::Box: {
      auto sub = f.child();
      return all_successors(m, w, [&](int u) { return eval_box(m, u, sub); });
    }
  }
  throw Error("bad formula node");
}

bool eval_ri(const Model& m, int w, const RIFormula& f) {
  switch (f.op()) {
    case RIOp::Var:
      return (m.extension(f.name()) >> w) & 1;
    case RIOp::Top:
      return true;
    case RIOp::Neg:
      return !eval_ri(m, w, f.child());
    case RIOp::And:
      return eval_ri(m, w, f.left()) && eval_ri(m, w, f.right());
    case RIOp::Circ: {
      auto sub = f.child();
      if (!eval_ri(m, w, sub)) return true;
      return all_successors(m, w, [&](int u) { return eval_ri(m, u, sub); });
    }
    case RIOp::Star: {
      auto sub = f.child();
      if (eval_ri(m, w, sub)) return true;
      return all_successors(m, w, [&](int u) { return eval_ri(m, u, sub); });
    }
  }
  throw Error("bad formula node");
}

bool eval_box(const Model& m, std::string_view world, const BoxFormula& f) {
  return eval_box(m, m.frame().require(world), f);
}
bool eval_ri(const Model& m, std::string_view world, const RIFormula& f) {
  return eval_ri(m, m.frame().require(world), f);
}

// ---------- validity ----------

namespace {

template <class F>
Verdict model_valid_impl(const Model& m, const F& f) {
  for (int w = 0; w < m.frame().size(); ++w) {
    bool ok;
    if constexpr (std::is_same_v<F, BoxFormula>) {
      ok = eval_box(m, w, f);
    } else {
      ok = eval_ri(m, w, f);
    }
    if (!ok) {
      return {false, Witness{m.frame().world(w), m.valuation()}};
    }
  }
  return {true, std::nullopt};
}

Valuation decode_valuation(const Frame& fr,
                           const std::vector<std::string>& vars,
                           std::uint64_t idx) {
  const int n = fr.size();
  Valuation out;
  for (std::size_t s = 0; s < vars.size(); ++s) {
    std::uint64_t mask = (idx >> (s * n)) & ((1ull << n) - 1);
    std::vector<std::string> ws;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1) ws.push_back(fr.world(i));
    }
    out[vars[s]] = std::move(ws);
  }
  return out;
}

}  // namespace

// Shared with the class-level oracle: check one compiled formula on one
// frame over every valuation of the given variable slots.
Verdict frame_valid_pooled(const Frame& fr, const NodePool& pool,
                           std::int32_t root, StepBudget& budget) {
  const int n = fr.size();
  const int v = static_cast<int>(pool.vars().size());
  const int bits = v * n;
  if (bits > 62) {
    throw BudgetExceeded("valuation space too large: 2^" +
                         std::to_string(bits));
  }
  budget.charge(std::max<std::uint64_t>(1, (1ull << bits) >> 8));

  const std::uint64_t all = n >= 64 ? ~0ull : ((1ull << n) - 1);
  const std::uint64_t world_mask = all;
  std::vector<std::uint64_t> masks(pool.size());
  std::vector<std::uint64_t> var_masks(std::max(v, 1));

  int best_world = n;
  std::uint64_t best_idx = 0;
  for (std::uint64_t idx = 0; idx < (1ull << bits); ++idx) {
    for (int s = 0; s < v; ++s) {
      var_masks[s] = (idx >> (s * n)) & world_mask;
    }
    pool.eval(n, fr.succ_masks().data(), var_masks.data(), masks.data());
    std::uint64_t fail = all & ~masks[root];
    if (fail) {
      int w = std::countr_zero(fail);
      if (w < best_world) {
        best_world = w;
        best_idx = idx;
        if (w == 0) break;
      }
    }
  }
  if (best_world == n) return {true, std::nullopt};
  std::vector<std::string> vars = pool.vars();
  return {false,
          Witness{fr.world(best_world), decode_valuation(fr, vars, best_idx)}};
}

namespace {

template <class F>
Verdict frame_valid_impl(const Frame& fr, const F& f, StepBudget& budget) {
  NodePool pool;
  for (const auto& var : f.variables()) pool.var_slot(var);  // sorted order
  std::int32_t root = pool.add(f);
  return frame_valid_pooled(fr, pool, root, budget);
}

}  // namespace

Verdict model_valid(const Model& m, const BoxFormula& f) {
  return model_valid_impl(m, f);
}
Verdict model_valid(const Model& m, const RIFormula& f) {
  return model_valid_impl(m, f);
}

Verdict frame_valid(const Frame& fr, const BoxFormula& f, StepBudget& budget) {
  return frame_valid_impl(fr, f, budget);
}
Verdict frame_valid(const Frame& fr, const RIFormula& f, StepBudget& budget) {
  return frame_valid_impl(fr, f, budget);
}
Verdict frame_valid(const Frame& fr, const BoxFormula& f) {
  StepBudget b;
  return frame_valid_impl(fr, f, b);
}
Verdict frame_valid(const Frame& fr, const RIFormula& f) {
  StepBudget b;
  return frame_valid_impl(fr, f, b);
}

}  // namespace riml
