#include "crglab/flat.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace crg {

namespace {

/// comp[j] < 0 marks a zero coordinate; otherwise coordinates sharing comp
/// form one block with v_j = zeta^{pot[j]} * (common value).
Flat canonicalize(int d, const std::vector<int>& comp, const std::vector<int>& pot) {
  const std::size_t n = comp.size();
  Flat f;
  f.d = d;
  f.block.assign(n, -1);
  f.offset.assign(n, 0);
  std::vector<int> renumber(n, -1);
  std::vector<int> base(n, 0);
  int next = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (comp[j] < 0) continue;
    auto c = static_cast<std::size_t>(comp[j]);
    if (renumber[c] < 0) {
      renumber[c] = next++;
      base[c] = pot[j];
    }
    f.block[j] = static_cast<std::int8_t>(renumber[c]);
    f.offset[j] = static_cast<std::uint8_t>((((pot[j] - base[c]) % d) + d) % d);
  }
  f.num_blocks = next;
  return f;
}

struct WeightedUnionFind {
  explicit WeightedUnionFind(std::size_t n, int d)
      : d(d), parent(n), pot(n, 0), zero(n, 0) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }

  // Returns the root; pot[j] afterwards is the exponent with v_j = zeta^pot v_root.
  int find(int j) {
    auto uj = static_cast<std::size_t>(j);
    if (parent[uj] == j) return j;
    const int p = parent[uj];
    const int root = find(p);
    pot[uj] = (pot[uj] + pot[static_cast<std::size_t>(p)]) % d;
    parent[uj] = root;
    return root;
  }

  // Imposes v_a = zeta^k v_b.
  void unite(int a, int b, int k) {
    const int ra = find(a);
    const int rb = find(b);
    const int pa = pot[static_cast<std::size_t>(a)];
    const int pb = pot[static_cast<std::size_t>(b)];
    if (ra == rb) {
      if (((pa - k - pb) % d + d) % d != 0) zero[static_cast<std::size_t>(ra)] = 1;
      return;
    }
    parent[static_cast<std::size_t>(ra)] = rb;
    pot[static_cast<std::size_t>(ra)] = (((k + pb - pa) % d) + d) % d;
    zero[static_cast<std::size_t>(rb)] |= zero[static_cast<std::size_t>(ra)];
  }

  int d;
  std::vector<int> parent;
  std::vector<int> pot;
  std::vector<char> zero;
};

void require_compatible(const Flat& a, const Flat& b) {
  if (a.d != b.d || a.n() != b.n()) throw std::invalid_argument("flats belong to different groups");
}

}  // namespace

std::vector<int> Flat::zeros() const {
  std::vector<int> out;
  for (int j = 0; j < n(); ++j) {
    if (block[static_cast<std::size_t>(j)] < 0) out.push_back(j);
  }
  return out;
}

std::vector<std::vector<int>> Flat::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(num_blocks));
  for (int j = 0; j < n(); ++j) {
    const int b = block[static_cast<std::size_t>(j)];
    if (b >= 0) out[static_cast<std::size_t>(b)].push_back(j);
  }
  return out;
}

std::size_t FlatHash::operator()(const Flat& f) const noexcept {
  std::size_t h = static_cast<std::size_t>(f.d) * 0x9e3779b97f4a7c15ULL;
  for (std::size_t j = 0; j < f.block.size(); ++j) {
    h ^= (static_cast<std::size_t>(f.block[j] + 1) * 131u + f.offset[j]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Flat full_space(int d, int n) {
  std::vector<int> comp(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) comp[static_cast<std::size_t>(j)] = j;
  return canonicalize(d, comp, std::vector<int>(static_cast<std::size_t>(n), 0));
}

Flat flat_of(const GroupElement& w) {
  const auto n = static_cast<std::size_t>(w.n());
  std::vector<int> comp(n, -1);
  std::vector<int> pot(n, 0);
  for (const auto& cyc : cycles(w)) {
    if (cycle_weight(w, cyc) != 0) continue;
    // v_{perm(i)} = zeta^{w_i} v_i along the cycle.
    int acc = 0;
    for (int i : cyc) {
      comp[static_cast<std::size_t>(i)] = cyc.front();
      pot[static_cast<std::size_t>(i)] = acc;
      acc = (acc + w.weights[static_cast<std::size_t>(i)]) % w.d;
    }
  }
  return canonicalize(w.d, comp, pot);
}

Flat act(const GroupElement& w, const Flat& z) {
  if (w.d != z.d || w.n() != z.n()) throw std::invalid_argument("act: element and flat belong to different groups");
  const auto n = static_cast<std::size_t>(z.n());
  std::vector<int> comp(n, -1);
  std::vector<int> pot(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const auto image = w.perm[j];
    comp[image] = z.block[j];
    pot[image] = z.offset[j] + w.weights[j];
  }
  return canonicalize(z.d, comp, pot);
}

Flat intersect(const Flat& a, const Flat& b) {
  require_compatible(a, b);
  const int n = a.n();
  WeightedUnionFind uf(static_cast<std::size_t>(n), a.d);
  for (const Flat* f : {&a, &b}) {
    std::vector<int> first(static_cast<std::size_t>(f->num_blocks), -1);
    for (int j = 0; j < n; ++j) {
      const int blk = f->block[static_cast<std::size_t>(j)];
      if (blk < 0) continue;
      auto& m = first[static_cast<std::size_t>(blk)];
      if (m < 0) {
        m = j;
      } else {
        uf.unite(j, m, f->offset[static_cast<std::size_t>(j)]);
      }
    }
  }
  for (const Flat* f : {&a, &b}) {
    for (int j = 0; j < n; ++j) {
      if (f->block[static_cast<std::size_t>(j)] < 0) uf.zero[static_cast<std::size_t>(uf.find(j))] = 1;
    }
  }
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<int> pot(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    const int root = uf.find(j);
    if (uf.zero[static_cast<std::size_t>(root)]) continue;
    comp[static_cast<std::size_t>(j)] = root;
    pot[static_cast<std::size_t>(j)] = uf.pot[static_cast<std::size_t>(j)];
  }
  return canonicalize(a.d, comp, pot);
}

bool contains(const Flat& outer, const Flat& inner) {
  require_compatible(outer, inner);
  const int n = outer.n();
  const int d = outer.d;
  std::vector<int> min_of(static_cast<std::size_t>(outer.num_blocks), -1);
  for (int j = 0; j < n; ++j) {
    const int ob = outer.block[static_cast<std::size_t>(j)];
    const int ib = inner.block[static_cast<std::size_t>(j)];
    if (ob < 0) {
      if (ib >= 0) return false;
      continue;
    }
    auto& m = min_of[static_cast<std::size_t>(ob)];
    if (m < 0) m = j;
    const int mb = inner.block[static_cast<std::size_t>(m)];
    if (mb < 0) {
      if (ib >= 0) return false;
      continue;
    }
    if (ib != mb) return false;
    const int rel = inner.offset[static_cast<std::size_t>(j)] - inner.offset[static_cast<std::size_t>(m)] -
                    outer.offset[static_cast<std::size_t>(j)];
    if (((rel % d) + d) % d != 0) return false;
  }
  return true;
}

bool fixes_pointwise(const GroupElement& w, const Flat& z) { return contains(flat_of(w), z); }

bool contains_point(const Flat& z, std::span<const std::complex<double>> v, double tol) {
  if (static_cast<int>(v.size()) != z.n()) throw std::invalid_argument("contains_point: dimension mismatch");
  std::vector<int> min_of(static_cast<std::size_t>(z.num_blocks), -1);
  for (int j = 0; j < z.n(); ++j) {
    const auto uj = static_cast<std::size_t>(j);
    const int b = z.block[uj];
    if (b < 0) {
      if (std::abs(v[uj]) > tol) return false;
      continue;
    }
    auto& m = min_of[static_cast<std::size_t>(b)];
    if (m < 0) {
      m = j;
      continue;
    }
    const double angle = 2.0 * std::numbers::pi * z.offset[uj] / z.d;
    const auto expected = std::polar(1.0, angle) * v[static_cast<std::size_t>(m)];
    if (std::abs(v[uj] - expected) > tol) return false;
  }
  return true;
}

std::string to_string(const Flat& z) {
  std::ostringstream os;
  const auto zs = z.zeros();
  if (!zs.empty()) {
    os << "0:{";
    for (std::size_t i = 0; i < zs.size(); ++i) os << (i ? "," : "") << zs[i] + 1;
    os << "}";
  }
  for (const auto& blk : z.blocks()) {
    os << "{";
    for (std::size_t i = 0; i < blk.size(); ++i) {
      const auto j = static_cast<std::size_t>(blk[i]);
      os << (i ? "," : "") << blk[i] + 1;
      if (z.offset[j] != 0) os << "^" << int{z.offset[j]};
    }
    os << "}";
  }
  return os.str();
}

}  // namespace crg
