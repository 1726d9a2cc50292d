#pragma once

#include <cstdint>
#include <vector>

#include "crglab/group.hpp"

namespace crg {

/// Reflection length l_R on all of W, computed by breadth-first growth of
/// balls around the identity.
class AbsoluteOrder {
 public:
  explicit AbsoluteOrder(const ReflectionGroup& g);
  /// Adopts a precomputed table (e.g. from a cache); validated cheaply.
  AbsoluteOrder(const ReflectionGroup& g, std::vector<std::uint8_t> lengths);

  const ReflectionGroup& group() const { return *g_; }
  int length(ElementId w) const { return lengths_[w]; }
  const std::vector<std::uint8_t>& lengths() const { return lengths_; }

  /// u <=_R v  iff  l(u) + l(u^{-1} v) = l(v).
  bool leq(ElementId u, ElementId v) const;

  /// The interval [1, c], ascending by element id.
  std::vector<ElementId> interval(ElementId c) const;

 private:
  const ReflectionGroup* g_;
  std::vector<std::uint8_t> lengths_;
};

}  // namespace crg
