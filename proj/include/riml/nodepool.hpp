#ifndef RIML_NODEPOOL_HPP
#define RIML_NODEPOOL_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "riml/formula.hpp"

namespace riml {

/// Hash-consed formula DAG for batch evaluation. Nodes are stored children
/// before parents, so one linear pass per model evaluates every interned
/// formula at every world at once (one bit mask per node). Shared across
/// both languages; a pool may mix them.
class NodePool {
public:
  enum class Op : std::uint8_t { Var, Top, Neg, And, Box, Circ, Star };

  struct Node {
    Op op;
    std::int32_t a;  // child id, or var slot for Var
    std::int32_t b;  // second child (And)
  };

  std::int32_t var_slot(const std::string& name);
  std::int32_t add(Op op, std::int32_t a = -1, std::int32_t b = -1);
  std::int32_t add(const BoxFormula& f);
  std::int32_t add(const RIFormula& f);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t size() const { return nodes_.size(); }

  /// out must hold size() masks; var_masks holds vars().size() extensions.
  void eval(int n_worlds, const std::uint64_t* succ,
            const std::uint64_t* var_masks, std::uint64_t* out) const;

private:
  std::vector<Node> nodes_;
  std::vector<std::string> vars_;
  std::unordered_map<std::string, std::int32_t> var_ids_;
  std::unordered_map<std::uint64_t, std::int32_t> interned_;
};

}  // namespace riml

#endif
