#pragma once

#include <filesystem>
#include <memory>
#include <optional>

#include "crglab/factorizations.hpp"

namespace crg {

inline constexpr int kCacheFormatVersion = 1;

/// A group with its length table, intersection lattice and the interval
/// [1, c] of the standard Coxeter element. Owns everything it points to.
struct GroupContext {
  ReflectionGroup group;
  std::unique_ptr<AbsoluteOrder> order;
  std::unique_ptr<FlatLattice> lattice;
  std::unique_ptr<FactorizationEngine> engine;
  bool from_cache = false;
};

/// Builds the context, reading and writing
///   <dir>/<d>_<r>_<n>/{lattice,lengths,nc}.json
/// when a cache directory is given. Files with another format version or
/// for another group are ignored and rewritten. Content is integer-only.
std::unique_ptr<GroupContext> load_context(int d, int r, int n,
                                           const std::optional<std::filesystem::path>& cache_dir = std::nullopt);

}  // namespace crg
