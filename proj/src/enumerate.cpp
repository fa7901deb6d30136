#include "riml/enumerate.hpp"

namespace riml {

std::vector<std::string> canonical_worlds(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back("w" + std::to_string(i));
  return out;
}

Frame frame_from_bits(int n, std::uint64_t bits) {
  auto worlds = canonical_worlds(n);
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if ((bits >> (i * n + j)) & 1) rel.emplace_back(worlds[i], worlds[j]);
    }
  }
  return Frame(std::move(worlds), std::move(rel));
}

void for_each_relation(int n, StepBudget& budget,
                       const std::function<bool(const std::uint64_t*)>& fn) {
  if (n < 1 || n > 7) {
    throw BudgetExceeded("frame enumeration supports 1..7 worlds");
  }
  const int bits = n * n;
  std::uint64_t succ[8];
  const std::uint64_t row = (1ull << n) - 1;
  for (std::uint64_t r = 0; r < (1ull << bits); ++r) {
    budget.charge(1);
    for (int i = 0; i < n; ++i) succ[i] = (r >> (i * n)) & row;
    if (!fn(succ)) return;
  }
}

}  // namespace riml
