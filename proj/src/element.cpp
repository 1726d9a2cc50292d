#include "crglab/element.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace crg {

namespace {

void require_same_group(const GroupElement& a, const GroupElement& b) {
  if (a.d != b.d || a.n() != b.n()) {
    throw std::invalid_argument("group elements belong to different groups");
  }
}

}  // namespace

GroupElement GroupElement::identity(int d, int n) {
  GroupElement e;
  e.d = d;
  e.perm.resize(static_cast<std::size_t>(n));
  std::iota(e.perm.begin(), e.perm.end(), std::uint8_t{0});
  e.weights.assign(static_cast<std::size_t>(n), 0);
  return e;
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  require_same_group(a, b);
  GroupElement out;
  out.d = a.d;
  const auto n = a.perm.size();
  out.perm.resize(n);
  out.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = b.perm[i];
    out.perm[i] = a.perm[j];
    out.weights[i] = static_cast<std::uint8_t>((b.weights[i] + a.weights[j]) % a.d);
  }
  return out;
}

GroupElement compose(const GroupElement& u, const GroupElement& v) { return multiply(v, u); }

GroupElement inverse(const GroupElement& u) {
  GroupElement out;
  out.d = u.d;
  const auto n = u.perm.size();
  out.perm.resize(n);
  out.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = u.perm[i];
    out.perm[j] = static_cast<std::uint8_t>(i);
    out.weights[j] = static_cast<std::uint8_t>((u.d - u.weights[i]) % u.d);
  }
  return out;
}

std::vector<std::vector<int>> cycles(const GroupElement& w) {
  const int n = w.n();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cyc;
    int i = start;
    while (!seen[static_cast<std::size_t>(i)]) {
      seen[static_cast<std::size_t>(i)] = 1;
      cyc.push_back(i);
      i = w.perm[static_cast<std::size_t>(i)];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

int cycle_weight(const GroupElement& w, const std::vector<int>& cycle) {
  int s = 0;
  for (int i : cycle) s += w.weights[static_cast<std::size_t>(i)];
  return s % w.d;
}

int fixed_space_dim(const GroupElement& w) {
  int dim = 0;
  for (const auto& cyc : cycles(w)) {
    if (cycle_weight(w, cyc) == 0) ++dim;
  }
  return w.d == 1 ? dim - 1 : dim;
}

std::string to_string(const GroupElement& w) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < w.n(); ++i) os << (i ? "," : "") << (w.perm[static_cast<std::size_t>(i)] + 1);
  os << '|';
  for (int i = 0; i < w.n(); ++i) os << (i ? "," : "") << int{w.weights[static_cast<std::size_t>(i)]};
  os << ']';
  return os.str();
}

void validate(const GroupElement& w, int r) {
  if (w.d < 1) throw std::invalid_argument("element: d must be positive");
  if (w.weights.size() != w.perm.size()) throw std::invalid_argument("element: perm/weights length mismatch");
  std::vector<char> hit(w.perm.size(), 0);
  int total = 0;
  for (std::size_t i = 0; i < w.perm.size(); ++i) {
    if (w.perm[i] >= w.perm.size() || hit[w.perm[i]]) throw std::invalid_argument("element: perm is not a permutation");
    hit[w.perm[i]] = 1;
    if (w.weights[i] >= w.d) throw std::invalid_argument("element: weight not reduced mod d");
    total += w.weights[i];
  }
  if (r == w.d && total % w.d != 0) throw std::invalid_argument("element: weight sum must vanish mod d in G(d,d,n)");
}

}  // namespace crg
