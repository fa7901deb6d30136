#ifndef RIML_FRAMES_HPP
#define RIML_FRAMES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "riml/common.hpp"
#include "riml/kripke.hpp"

namespace riml {

/// R united with the diagonal.
Frame reflexive_closure(const Frame& f);

/// reduced comes from original by deleting reflexive pairs only:
/// rel(reduced) is contained in rel(original) and the difference sits on
/// the diagonal. Throws WorldMismatch when the world sets differ.
bool is_mirror_reduction(const Frame& reduced, const Frame& original);

/// All 2^k deletions of the k reflexive pairs, in binary-counter order
/// over the reflexive pairs sorted by world: the frame itself first, the
/// fully reduced frame last. BudgetExceeded when k exceeds max_bits.
std::vector<Frame> mirror_reductions(const Frame& f,
                                     int max_bits = kDefaultMaxMirrorBits);

/// Same world set and the same non-diagonal pairs; the frames differ at
/// most in which reflexive pairs they carry.
bool mirror_related(const Frame& a, const Frame& b);

class FrameClass {
public:
  enum class Kind {
    All,
    Reflexive,
    Serial,
    Transitive,
    Symmetric,
    Euclidean,
    Final,
    Equivalence,
  };

  FrameClass(Kind k) : parts_{k} {}
  static FrameClass intersection(const std::vector<FrameClass>& parts);

  /// Names: all, reflexive, serial, transitive, symmetric, euclidean,
  /// final, equivalence; intersections joined with '+' (or ',').
  static FrameClass parse(std::string_view text);

  const std::vector<Kind>& parts() const { return parts_; }
  std::string name() const;

private:
  FrameClass() = default;
  std::vector<Kind> parts_;
};

bool class_member(const Frame& f, const FrameClass& c);
/// Same predicate on raw successor masks (enumeration hot path).
bool class_member(int n, const std::uint64_t* succ, const FrameClass& c);

struct RobustnessReport {
  bool robust = false;
  std::optional<Frame> witness;  // first class member whose closure leaves
  std::uint64_t frames_checked = 0;
};

/// Does the class survive reflexive closure, over all frames with at most
/// max_size worlds?
RobustnessReport robust_under_reflexivity(const FrameClass& c, int max_size,
                                          StepBudget& budget);
RobustnessReport robust_under_reflexivity(const FrameClass& c, int max_size);

using WorldMap = std::map<std::string, std::string>;

struct MorphismCheck {
  bool forth = false;
  bool back = false;
  bool bounded() const { return forth && back; }
};

/// map must be total on src worlds and land in dst worlds.
MorphismCheck check_morphism(const Frame& src, const Frame& dst,
                             const WorldMap& map);
bool is_bounded_morphism(const Frame& src, const Frame& dst,
                         const WorldMap& map);

/// sub's worlds form a successor-closed subset of sup's and sub's relation
/// is exactly sup's restricted to them.
bool is_generated_subframe(const Frame& sub, const Frame& sup);

/// The subframe generated by root: all worlds reachable from it (root
/// included), in sup's world order.
Frame generated_subframe(const Frame& sup, std::string_view root);

}  // namespace riml

#endif
