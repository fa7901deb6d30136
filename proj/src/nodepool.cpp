#include "riml/nodepool.hpp"

#include <cassert>

namespace riml {

std::int32_t NodePool::var_slot(const std::string& name) {
  auto it = var_ids_.find(name);
  if (it != var_ids_.end()) return it->second;
  auto id = static_cast<std::int32_t>(vars_.size());
  vars_.push_back(name);
  var_ids_.emplace(name, id);
  return id;
}

std::int32_t NodePool::add(Op op, std::int32_t a, std::int32_t b) {
  std::uint64_t key = (static_cast<std::uint64_t>(op) << 60) |
                      (static_cast<std::uint64_t>(a + 1) << 30) |
                      static_cast<std::uint64_t>(b + 1);
  auto it = interned_.find(key);
  if (it != interned_.end()) return it->second;
  auto id = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back({op, a, b});
  interned_.emplace(key, id);
  return id;
}

std::int32_t NodePool::add(const BoxFormula& f) {
  switch (f.op()) {
    case BoxOp::Var:
      return add(Op::Var, var_slot(f.name()));
    case BoxOp::Top:
      return add(Op::Top);
    case BoxOp::Neg:
      return add(Op::Neg, add(f.child()));
    case BoxOp::And: {
      auto l = add(f.left());
      auto r = add(f.right());
      return add(Op::And, l, r);
    }
    case BoxOp::Box:
      return add(Op::Box, add(f.child()));
  }
  assert(false);
  return -1;
}

std::int32_t NodePool::add(const RIFormula& f) {
  switch (f.op()) {
    case RIOp::Var:
      return add(Op::Var, var_slot(f.name()));
    case RIOp::Top:
      return add(Op::Top);
    case RIOp::Neg:
      return add(Op::Neg, add(f.child()));
    case RIOp::And: {
      auto l = add(f.left());
      auto r = add(f.right());
      return add(Op::And, l, r);
    }
    case RIOp::Circ:
      return add(Op::Circ, add(f.child()));
    case RIOp::Star:
      return add(Op::Star, add(f.child()));
  }
  assert(false);
  return -1;
}

void NodePool::eval(int n_worlds, const std::uint64_t* succ,
                    const std::uint64_t* var_masks, std::uint64_t* out) const {
  const std::uint64_t all =
      n_worlds >= 64 ? ~0ull : ((1ull << n_worlds) - 1);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& nd = nodes_[i];
    switch (nd.op) {
      case Op::Var:
        out[i] = var_masks[nd.a];
        break;
      case Op::Top:
        out[i] = all;
        break;
      case Op::Neg:
        out[i] = all & ~out[nd.a];
        break;
      case Op::And:
        out[i] = out[nd.a] & out[nd.b];
        break;
      case Op::Box:
      case Op::Circ:
      case Op::Star: {
        const std::uint64_t m = out[nd.a];
        std::uint64_t boxed = 0;
        for (int w = 0; w < n_worlds; ++w) {
          if ((succ[w] & ~m) == 0) boxed |= 1ull << w;
        }
        if (nd.op == Op::Box) out[i] = boxed;
        else if (nd.op == Op::Circ) out[i] = boxed | (all & ~m);
        else out[i] = boxed | m;
        break;
      }
    }
  }
}

}  // namespace riml
