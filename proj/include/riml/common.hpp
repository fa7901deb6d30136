#ifndef RIML_COMMON_HPP
#define RIML_COMMON_HPP

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace riml {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Formula or document text that does not conform to the grammar.
/// Carries the byte offset of the failure and the tokens that would
/// have been accepted there.
class SyntaxError : public Error {
public:
  SyntaxError(const std::string& msg, std::size_t offset,
              std::vector<std::string> expected)
      : Error(msg + " at offset " + std::to_string(offset)),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class UnknownWorld : public Error {
public:
  explicit UnknownWorld(const std::string& world)
      : Error("unknown world: " + world) {}
};

class WorldMismatch : public Error {
public:
  using Error::Error;
};

class BudgetExceeded : public Error {
public:
  using Error::Error;
};

class AtomBudgetExceeded : public Error {
public:
  using Error::Error;
};

class ShapeError : public Error {
public:
  using Error::Error;
};

/// Malformed input documents (frame/model/proof files).
class InputError : public Error {
public:
  using Error::Error;
};

inline constexpr std::uint64_t kDefaultStepLimit = 10'000'000;
inline constexpr int kDefaultMaxTautAtoms = 16;
inline constexpr int kDefaultMaxMirrorBits = 20;
inline constexpr int kDefaultMaxWorlds = 3;

/// Work meter shared by the enumeration-based operations. One step covers
/// one frame-level unit of work (one enumerated frame, or one block of up
/// to 256 model evaluations while checking a frame). Thread safe.
class StepBudget {
public:
  explicit StepBudget(std::uint64_t limit = kDefaultStepLimit) : limit_(limit) {}

  static StepBudget unlimited() { return StepBudget(UINT64_MAX); }

  StepBudget(const StepBudget&) = delete;
  StepBudget& operator=(const StepBudget&) = delete;
  StepBudget(StepBudget&& o) noexcept
      : limit_(o.limit_), used_(o.used_.load(std::memory_order_relaxed)) {}

  void charge(std::uint64_t n = 1) {
    std::uint64_t total = used_.fetch_add(n, std::memory_order_relaxed) + n;
    if (total > limit_) {
      throw BudgetExceeded("step budget exceeded: " + std::to_string(total) +
                           " > " + std::to_string(limit_));
    }
  }

  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
  std::uint64_t limit() const { return limit_; }

private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

}  // namespace riml

#endif
