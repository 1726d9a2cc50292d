#include "crglab/absolute_order.hpp"

#include <stdexcept>

namespace crg {

namespace {
constexpr std::uint8_t kUnset = 0xff;
}

AbsoluteOrder::AbsoluteOrder(const ReflectionGroup& g) : g_(&g), lengths_(g.size(), kUnset) {
  lengths_[g.identity()] = 0;
  std::vector<ElementId> frontier{g.identity()};
  std::size_t reached = 1;
  const int radius = g.rank() + 2;
  for (int len = 1; !frontier.empty() && reached < g.size(); ++len) {
    if (len > radius) throw std::logic_error("reflection length BFS exceeded rank + 2");
    std::vector<ElementId> next;
    for (ElementId w : frontier) {
      for (ElementId t : g.reflections()) {
        const ElementId wt = g.mul(w, t);
        if (lengths_[wt] != kUnset) continue;
        lengths_[wt] = static_cast<std::uint8_t>(len);
        next.push_back(wt);
      }
    }
    reached += next.size();
    frontier = std::move(next);
  }
  if (reached != g.size()) throw std::logic_error("reflections do not generate the group");
}

AbsoluteOrder::AbsoluteOrder(const ReflectionGroup& g, std::vector<std::uint8_t> lengths)
    : g_(&g), lengths_(std::move(lengths)) {
  if (lengths_.size() != g.size() || lengths_[g.identity()] != 0) {
    throw std::invalid_argument("length table does not match the group");
  }
  for (ElementId t : g.reflections()) {
    if (lengths_[t] != 1) throw std::invalid_argument("length table: reflection without length 1");
  }
}

bool AbsoluteOrder::leq(ElementId u, ElementId v) const {
  return lengths_[u] + lengths_[g_->mul(g_->inverse(u), v)] == lengths_[v];
}

std::vector<ElementId> AbsoluteOrder::interval(ElementId c) const {
  std::vector<ElementId> out;
  for (ElementId u = 0; u < g_->size(); ++u) {
    if (leq(u, c)) out.push_back(u);
  }
  return out;
}

}  // namespace crg
