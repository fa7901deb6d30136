#include "riml/frames.hpp"

#include <bit>
#include <cctype>
#include <utility>

#include "riml/enumerate.hpp"

namespace riml {

namespace {

/// from's relation expressed in to's index space. Callers have already
/// checked that the world sets agree.
std::vector<std::uint64_t> remap_to(const Frame& from, const Frame& to) {
  std::vector<std::uint64_t> out(to.size(), 0);
  for (auto [i, j] : from.pairs()) {
    out[to.require(from.world(i))] |= 1ull << to.require(from.world(j));
  }
  return out;
}

Frame frame_of(int n, const std::uint64_t* succ) {
  return Frame(canonical_worlds(n), {})
      .with_succ_masks(std::vector<std::uint64_t>(succ, succ + n));
}

}  // namespace

Frame reflexive_closure(const Frame& f) {
  auto succ = f.succ_masks();
  for (int i = 0; i < f.size(); ++i) succ[i] |= 1ull << i;
  return f.with_succ_masks(std::move(succ));
}

bool is_mirror_reduction(const Frame& reduced, const Frame& original) {
  if (!reduced.same_world_set(original)) {
    throw WorldMismatch("mirror reduction relates frames on the same worlds");
  }
  auto red = remap_to(reduced, original);
  for (int i = 0; i < original.size(); ++i) {
    std::uint64_t orig = original.successors(i);
    if (red[i] & ~orig) return false;
    if ((orig & ~red[i]) & ~(1ull << i)) return false;
  }
  return true;
}

std::vector<Frame> mirror_reductions(const Frame& f, int max_bits) {
  std::vector<int> refl;
  for (int i = 0; i < f.size(); ++i) {
    if (f.related(i, i)) refl.push_back(i);
  }
  const int k = static_cast<int>(refl.size());
  if (k > max_bits) {
    throw BudgetExceeded("frame has " + std::to_string(k) +
                         " reflexive pairs; limit " + std::to_string(max_bits));
  }
  std::vector<Frame> out;
  out.reserve(std::size_t{1} << k);
  const auto& base = f.succ_masks();
  for (std::uint64_t c = 0; c < (1ull << k); ++c) {
    auto succ = base;
    for (int b = 0; b < k; ++b) {
      if ((c >> b) & 1) succ[refl[b]] &= ~(1ull << refl[b]);
    }
    out.push_back(f.with_succ_masks(std::move(succ)));
  }
  return out;
}

bool mirror_related(const Frame& a, const Frame& b) {
  if (!a.same_world_set(b)) return false;
  auto bm = remap_to(b, a);
  for (int i = 0; i < a.size(); ++i) {
    const std::uint64_t diag = 1ull << i;
    if ((a.successors(i) & ~diag) != (bm[i] & ~diag)) return false;
  }
  return true;
}

FrameClass FrameClass::intersection(const std::vector<FrameClass>& parts) {
  FrameClass out;
  for (const auto& p : parts) {
    out.parts_.insert(out.parts_.end(), p.parts_.begin(), p.parts_.end());
  }
  if (out.parts_.empty()) out.parts_.push_back(Kind::All);
  return out;
}

namespace {

const char* kind_name(FrameClass::Kind k) {
  switch (k) {
    case FrameClass::Kind::All: return "all";
    case FrameClass::Kind::Reflexive: return "reflexive";
    case FrameClass::Kind::Serial: return "serial";
    case FrameClass::Kind::Transitive: return "transitive";
    case FrameClass::Kind::Symmetric: return "symmetric";
    case FrameClass::Kind::Euclidean: return "euclidean";
    case FrameClass::Kind::Final: return "final";
    case FrameClass::Kind::Equivalence: return "equivalence";
  }
  return "?";
}

FrameClass::Kind kind_from_name(const std::string& name) {
  using Kind = FrameClass::Kind;
  static const std::pair<const char*, Kind> table[] = {
      {"all", Kind::All},
      {"reflexive", Kind::Reflexive},
      {"serial", Kind::Serial},
      {"transitive", Kind::Transitive},
      {"symmetric", Kind::Symmetric},
      {"euclidean", Kind::Euclidean},
      {"final", Kind::Final},
      {"equivalence", Kind::Equivalence},
  };
  for (const auto& [text, kind] : table) {
    if (name == text) return kind;
  }
  throw InputError("unknown frame class: " + name);
}

}  // namespace

FrameClass FrameClass::parse(std::string_view text) {
  FrameClass out;
  std::string word;
  auto flush = [&] {
    if (word.empty()) throw InputError("empty frame class name");
    out.parts_.push_back(kind_from_name(word));
    word.clear();
  };
  for (char ch : text) {
    if (ch == '+' || ch == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      word.push_back(static_cast<char>(
          std::tolower(static_cast<unsigned char>(ch))));
    }
  }
  flush();
  return out;
}

std::string FrameClass::name() const {
  std::string out;
  for (Kind k : parts_) {
    if (!out.empty()) out += '+';
    out += kind_name(k);
  }
  return out;
}

namespace {

bool member_one(int n, const std::uint64_t* succ, FrameClass::Kind k) {
  using Kind = FrameClass::Kind;
  switch (k) {
    case Kind::All:
      return true;
    case Kind::Reflexive:
      for (int i = 0; i < n; ++i) {
        if (!((succ[i] >> i) & 1)) return false;
      }
      return true;
    case Kind::Serial:
      for (int i = 0; i < n; ++i) {
        if (succ[i] == 0) return false;
      }
      return true;
    case Kind::Transitive:
      for (int i = 0; i < n; ++i) {
        for (std::uint64_t m = succ[i]; m; m &= m - 1) {
          if (succ[std::countr_zero(m)] & ~succ[i]) return false;
        }
      }
      return true;
    case Kind::Symmetric:
      for (int i = 0; i < n; ++i) {
        for (std::uint64_t m = succ[i]; m; m &= m - 1) {
          if (!((succ[std::countr_zero(m)] >> i) & 1)) return false;
        }
      }
      return true;
    case Kind::Euclidean:
      for (int i = 0; i < n; ++i) {
        for (std::uint64_t m = succ[i]; m; m &= m - 1) {
          if (succ[i] & ~succ[std::countr_zero(m)]) return false;
        }
      }
      return true;
    case Kind::Final:
      // Every world reaches a world whose only successor, if any, is
      // itself.
      for (int i = 0; i < n; ++i) {
        bool found = false;
        for (std::uint64_t m = succ[i]; m && !found; m &= m - 1) {
          int j = std::countr_zero(m);
          found = !(succ[j] & ~(1ull << j));
        }
        if (!found) return false;
      }
      return true;
    case Kind::Equivalence:
      return member_one(n, succ, Kind::Reflexive) &&
             member_one(n, succ, Kind::Symmetric) &&
             member_one(n, succ, Kind::Transitive);
  }
  return false;
}

}  // namespace

bool class_member(int n, const std::uint64_t* succ, const FrameClass& c) {
  for (FrameClass::Kind k : c.parts()) {
    if (!member_one(n, succ, k)) return false;
  }
  return true;
}

bool class_member(const Frame& f, const FrameClass& c) {
  return class_member(f.size(), f.succ_masks().data(), c);
}

RobustnessReport robust_under_reflexivity(const FrameClass& c, int max_size,
                                          StepBudget& budget) {
  if (max_size > 7) {
    throw BudgetExceeded("robustness search supports at most 7 worlds");
  }
  RobustnessReport rep;
  rep.robust = true;
  for (int n = 1; n <= max_size && rep.robust; ++n) {
    for_each_relation(n, budget, [&](const std::uint64_t* succ) {
      ++rep.frames_checked;
      if (!class_member(n, succ, c)) return true;
      std::uint64_t closed[8];
      for (int i = 0; i < n; ++i) closed[i] = succ[i] | (1ull << i);
      if (class_member(n, closed, c)) return true;
      rep.robust = false;
      rep.witness = frame_of(n, succ);
      return false;
    });
  }
  return rep;
}

RobustnessReport robust_under_reflexivity(const FrameClass& c, int max_size) {
  StepBudget budget;
  return robust_under_reflexivity(c, max_size, budget);
}

MorphismCheck check_morphism(const Frame& src, const Frame& dst,
                             const WorldMap& map) {
  for (const auto& [u, v] : map) {
    if (src.index_of(u) < 0) throw UnknownWorld(u);
    if (dst.index_of(v) < 0) throw UnknownWorld(v);
  }
  std::vector<int> img(src.size());
  for (int i = 0; i < src.size(); ++i) {
    auto it = map.find(src.world(i));
    if (it == map.end()) {
      throw InputError("morphism map missing world: " + src.world(i));
    }
    img[i] = dst.require(it->second);
  }
  MorphismCheck out;
  out.forth = true;
  out.back = true;
  for (int u = 0; u < src.size(); ++u) {
    std::uint64_t hit = 0;
    for (std::uint64_t m = src.successors(u); m; m &= m - 1) {
      int v = std::countr_zero(m);
      if (!dst.related(img[u], img[v])) out.forth = false;
      hit |= 1ull << img[v];
    }
    if (dst.successors(img[u]) & ~hit) out.back = false;
  }
  return out;
}

bool is_bounded_morphism(const Frame& src, const Frame& dst,
                         const WorldMap& map) {
  return check_morphism(src, dst, map).bounded();
}

bool is_generated_subframe(const Frame& sub, const Frame& sup) {
  std::vector<int> idx(sub.size());
  std::uint64_t keep = 0;
  for (int i = 0; i < sub.size(); ++i) {
    int j = sup.index_of(sub.world(i));
    if (j < 0) return false;
    idx[i] = j;
    keep |= 1ull << j;
  }
  for (int i = 0; i < sub.size(); ++i) {
    if (sup.successors(idx[i]) & ~keep) return false;
    for (int j = 0; j < sub.size(); ++j) {
      if (sub.related(i, j) != sup.related(idx[i], idx[j])) return false;
    }
  }
  return true;
}

Frame generated_subframe(const Frame& sup, std::string_view root) {
  std::uint64_t keep = 1ull << sup.require(root);
  for (std::uint64_t frontier = keep; frontier;) {
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m; m &= m - 1) {
      next |= sup.successors(std::countr_zero(m));
    }
    frontier = next & ~keep;
    keep |= next;
  }
  std::vector<std::string> worlds;
  for (int i = 0; i < sup.size(); ++i) {
    if ((keep >> i) & 1) worlds.push_back(sup.world(i));
  }
  std::vector<std::pair<std::string, std::string>> rel;
  for (auto [i, j] : sup.pairs()) {
    if (((keep >> i) & 1) && ((keep >> j) & 1)) {
      rel.emplace_back(sup.world(i), sup.world(j));
    }
  }
  return Frame(std::move(worlds), std::move(rel));
}

}  // namespace riml
