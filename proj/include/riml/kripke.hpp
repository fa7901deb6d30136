#ifndef RIML_KRIPKE_HPP
#define RIML_KRIPKE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "riml/common.hpp"
#include "riml/formula.hpp"

namespace riml {

/// var name -> worlds where it holds
using Valuation = std::map<std::string, std::vector<std::string>>;

/// Finite frame: nonempty ordered world list plus an accessibility
/// relation. Worlds keep their given order; it fixes witness order and
/// serialisation. At most 64 worlds.
class Frame {
public:
  Frame(std::vector<std::string> worlds,
        std::vector<std::pair<std::string, std::string>> rel);

  int size() const { return static_cast<int>(worlds_.size()); }
  const std::vector<std::string>& worlds() const { return worlds_; }
  const std::string& world(int i) const { return worlds_[i]; }

  /// -1 when absent.
  int index_of(std::string_view name) const;
  /// Throws UnknownWorld.
  int require(std::string_view name) const;

  bool related(int i, int j) const { return (succ_[i] >> j) & 1; }
  std::uint64_t successors(int i) const { return succ_[i]; }
  const std::vector<std::uint64_t>& succ_masks() const { return succ_; }

  /// Pairs in canonical (source, target) index order.
  std::vector<std::pair<int, int>> pairs() const;
  std::vector<std::pair<std::string, std::string>> pair_names() const;

  /// Same worlds, different relation (index pairs).
  Frame with_relation(const std::vector<std::pair<int, int>>& rel) const;
  Frame with_succ_masks(std::vector<std::uint64_t> succ) const;

  bool same_world_set(const Frame& o) const;
  bool operator==(const Frame& o) const {
    return worlds_ == o.worlds_ && succ_ == o.succ_;
  }
  bool operator!=(const Frame& o) const { return !(*this == o); }

private:
  Frame() = default;
  std::vector<std::string> worlds_;
  std::vector<std::uint64_t> succ_;
};

/// Frame with a valuation. Variables not mentioned are false everywhere.
class Model {
public:
  Model(Frame frame, const Valuation& val);

  const Frame& frame() const { return frame_; }
  std::uint64_t extension(const std::string& var) const;
  Valuation valuation() const;

private:
  Frame frame_;
  std::map<std::string, std::uint64_t> val_;
};

// Truth clauses. Box: true at w iff the operand holds at every successor.
// Circ: true at w iff the operand fails at w or holds at every successor.
// Star: true at w iff the operand holds at w or at every successor.
bool eval_box(const Model& m, std::string_view world, const BoxFormula& f);
bool eval_ri(const Model& m, std::string_view world, const RIFormula& f);
bool eval_box(const Model& m, int world, const BoxFormula& f);
bool eval_ri(const Model& m, int world, const RIFormula& f);

struct Witness {
  std::string world;
  Valuation valuation;
};

struct Verdict {
  bool holds = false;
  std::optional<Witness> witness;
};

/// True at every world of the model; witness is the first failing world.
Verdict model_valid(const Model& m, const BoxFormula& f);
Verdict model_valid(const Model& m, const RIFormula& f);

/// True in every model on the frame. Only valuations over the variables of
/// the formula are enumerated; the witness is the first failure in
/// lexicographic (world, valuation) order.
Verdict frame_valid(const Frame& fr, const BoxFormula& f, StepBudget& budget);
Verdict frame_valid(const Frame& fr, const RIFormula& f, StepBudget& budget);
Verdict frame_valid(const Frame& fr, const BoxFormula& f);
Verdict frame_valid(const Frame& fr, const RIFormula& f);

class NodePool;

/// frame_valid for a formula already interned into a pool; every pool
/// variable takes part in the valuation enumeration.
Verdict frame_valid_pooled(const Frame& fr, const NodePool& pool,
                           std::int32_t root, StepBudget& budget);

}  // namespace riml

#endif
