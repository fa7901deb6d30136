#ifndef RIML_ENUMERATE_HPP
#define RIML_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "riml/common.hpp"
#include "riml/kripke.hpp"

namespace riml {

/// Worlds w1..wn used by frame enumeration.
std::vector<std::string> canonical_worlds(int n);

/// Frame on canonical worlds from a relation bitmask: pair (i, j) present
/// iff bit i*n+j is set.
Frame frame_from_bits(int n, std::uint64_t bits);

/// All 2^(n*n) relations on n worlds, in ascending bitmask order, as raw
/// successor masks (stack-allocated, reused between calls). Charges one
/// budget step per frame. Stops early when fn returns false.
void for_each_relation(int n, StepBudget& budget,
                       const std::function<bool(const std::uint64_t*)>& fn);

}  // namespace riml

#endif
