#include <doctest.h>

#include <map>
#include <set>

#include "crglab/absolute_order.hpp"
#include "crglab/lattice.hpp"

using namespace crg;

namespace {

// Set partitions of {0..n-1} via restricted growth strings, counted by
// number of blocks.
std::map<int, int> set_partitions_by_blocks(int n) {
  std::map<int, int> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  for (;;) {
    ++out[*std::max_element(a.begin(), a.end()) + 1];
    int i = n - 1;
    for (; i > 0; --i) {
      const int mx = *std::max_element(a.begin(), a.begin() + i);
      if (a[static_cast<std::size_t>(i)] <= mx) break;
    }
    if (i == 0) return out;
    ++a[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) a[static_cast<std::size_t>(j)] = 0;
  }
}

IntPoly product_of_linear(const std::vector<std::int64_t>& roots) {
  IntPoly p = IntPoly::constant(1);
  for (auto r : roots) p = p * IntPoly::linear_root(r);
  return p;
}

std::vector<std::int64_t> coexponents(int d, int r, int n) {
  std::vector<std::int64_t> out;
  if (d == 1) {
    for (int i = 1; i < n; ++i) out.push_back(i);
  } else if (r == 1) {
    for (int i = 0; i < n; ++i) out.push_back(1 + static_cast<std::int64_t>(i) * d);
  } else {
    for (int i = 0; i < n - 1; ++i) out.push_back(1 + static_cast<std::int64_t>(i) * d);
    out.push_back(static_cast<std::int64_t>(n - 1) * (d - 1));
  }
  return out;
}

const FlatOrbit& orbit_of(const FlatLattice& lat, const GroupElement& w) {
  return lat.orbits()[static_cast<std::size_t>(lat.orbit_of_element(lat.group().id_of(w)))];
}

}  // namespace

TEST_CASE("lattice of S4 matches set partitions") {
  auto g = ReflectionGroup::build(1, 1, 4);
  FlatLattice lat(g);
  CHECK(lat.flats().size() == 15);
  std::map<int, int> by_dim;
  for (const auto& z : lat.flats()) ++by_dim[z.dim()];
  for (auto [blocks, count] : set_partitions_by_blocks(4)) CHECK(by_dim[blocks - 1] == count);
  CHECK(lat.flat(lat.full_space()).dim() == 3);
  CHECK(lat.flat(lat.origin()).dim() == 0);

  auto b2 = ReflectionGroup::build(2, 1, 2);
  CHECK(FlatLattice(b2).flats().size() == 6);
}

TEST_CASE("containment agrees with the Galois correspondence") {
  for (auto [d, r, n] : std::vector<std::tuple<int, int, int>>{{1, 1, 4}, {2, 1, 3}, {3, 3, 3}, {2, 2, 4}, {3, 1, 2}}) {
    auto g = ReflectionGroup::build(d, r, n);
    FlatLattice lat(g);
    std::vector<std::set<ElementId>> stab;
    for (FlatId z = 0; z < lat.flats().size(); ++z) {
      auto s = lat.pointwise_stabilizer(z);
      stab.emplace_back(s.begin(), s.end());
    }
    for (FlatId a = 0; a < lat.flats().size(); ++a) {
      for (FlatId b = 0; b < lat.flats().size(); ++b) {
        const bool galois = std::includes(stab[b].begin(), stab[b].end(), stab[a].begin(), stab[a].end());
        CHECK(lat.contains(a, b) == galois);
      }
    }
  }
}

TEST_CASE("orbits and stabilizers in S4") {
  auto g = ReflectionGroup::build(1, 1, 4);
  FlatLattice lat(g);
  const auto& pp = orbit_of(lat, GroupElement{1, {1, 0, 3, 2}, {0, 0, 0, 0}});
  CHECK(pp.pointwise_order == 4);
  CHECK(pp.setwise_order == 8);
  CHECK(pp.index == 2);
  CHECK(pp.name == "A1^2");
  const auto& a2 = orbit_of(lat, GroupElement{1, {1, 2, 0, 3}, {0, 0, 0, 0}});
  CHECK(a2.pointwise_order == 6);
  CHECK(a2.setwise_order == 6);
  CHECK(a2.index == 1);
  CHECK(a2.name == "A2");
  const auto& full = lat.orbits().front();
  CHECK(full.pointwise_order == 1);
  CHECK(full.index == 24);
  CHECK(lat.orbits().size() == 5);
  for (const auto& orb : lat.orbits()) CHECK(orb.size() * orb.setwise_order == g.size());
}

TEST_CASE("characteristic polynomials") {
  auto s4 = ReflectionGroup::build(1, 1, 4);
  FlatLattice lat(s4);
  const auto& a1 = orbit_of(lat, GroupElement{1, {1, 0, 2, 3}, {0, 0, 0, 0}});
  CHECK(a1.char_poly == IntPoly({2, -3, 1}));
  const auto& a2 = orbit_of(lat, GroupElement{1, {1, 2, 0, 3}, {0, 0, 0, 0}});
  CHECK(a2.char_poly == IntPoly({-1, 1}));

  for (auto [d, r, n] : std::vector<std::tuple<int, int, int>>{
           {1, 1, 4}, {1, 1, 5}, {2, 1, 3}, {2, 2, 4}, {3, 1, 2}, {3, 3, 3}, {5, 5, 2}, {4, 1, 3}}) {
    auto g = ReflectionGroup::build(d, r, n);
    FlatLattice l(g);
    CAPTURE(g.descriptor().name());
    CHECK(l.char_poly(l.full_space()) == product_of_linear(coexponents(d, r, n)));
    for (const auto& orb : l.orbits()) {
      CHECK(orb.char_poly.degree() == orb.dim);
      CHECK(orb.char_poly.leading() == 1);
      if (orb.dim > 0) CHECK(orb.char_poly.eval(1) == 0);
      if (d <= 2) CHECK(orb.os_exponents.has_value());
    }
  }
}

TEST_CASE("weighted characteristic polynomials sum to the shifted degree product") {
  for (auto [d, r, n] : std::vector<std::tuple<int, int, int>>{
           {1, 1, 3}, {1, 1, 4}, {1, 1, 5}, {2, 1, 2}, {2, 1, 3}, {2, 2, 4}, {3, 1, 2}, {3, 3, 3}, {5, 5, 2}}) {
    auto g = ReflectionGroup::build(d, r, n);
    FlatLattice l(g);
    IntPoly lhs;
    for (const auto& orb : l.orbits()) {
      lhs += orb.char_poly * static_cast<std::int64_t>(g.size() / orb.index);
    }
    IntPoly rhs = IntPoly::constant(1);
    for (int di : g.descriptor().degrees) rhs = rhs * IntPoly({di - 1, 1});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("C_Z reports") {
  auto s4 = ReflectionGroup::build(1, 1, 4);
  FlatLattice lat(s4);
  const auto full = lat.cz_report(lat.full_space());
  CHECK(full.is_reflection_group);
  REQUIRE(full.degrees);
  CHECK(*full.degrees == std::vector<int>{2, 3, 4});

  const auto a2 = lat.cz_report(lat.id_of(flat_of(GroupElement{1, {1, 2, 0, 3}, {0, 0, 0, 0}})));
  CHECK(a2.order == 1);
  REQUIRE(a2.q_polynomial);
  CHECK(*a2.q_polynomial == IntPoly::q_integer(4));

  const auto pp = lat.cz_report(lat.id_of(flat_of(GroupElement{1, {1, 0, 3, 2}, {0, 0, 0, 0}})));
  CHECK(pp.order == 2);
  REQUIRE(pp.q_polynomial);
  CHECK(*pp.q_polynomial == IntPoly({1, 0, 1}));

  for (auto [d, r, n] : std::vector<std::tuple<int, int, int>>{{2, 1, 3}, {2, 2, 4}, {3, 1, 2}, {3, 3, 3}, {1, 1, 5}}) {
    auto g = ReflectionGroup::build(d, r, n);
    FlatLattice l(g);
    const auto rep = l.cz_report(l.full_space());
    REQUIRE(rep.degrees);
    CHECK(*rep.degrees == g.descriptor().degrees);
  }
}

TEST_CASE("reflection lengths") {
  auto g = ReflectionGroup::build(1, 1, 4);
  AbsoluteOrder ao(g);
  CHECK(ao.length(g.id_of(GroupElement{1, {1, 0, 2, 3}, {0, 0, 0, 0}})) == 1);
  CHECK(ao.length(g.id_of(GroupElement{1, {1, 0, 3, 2}, {0, 0, 0, 0}})) == 2);
  const ElementId c = g.id_of(GroupElement{1, {1, 2, 3, 0}, {0, 0, 0, 0}});
  CHECK(ao.length(c) == 3);
  for (ElementId t : g.reflections()) CHECK(ao.leq(t, c));
  for (ElementId v = 0; v < g.size(); ++v) CHECK(ao.leq(g.identity(), v));
  // (13)(24) is a crossing pair partition for the cycle 1 -> 2 -> 3 -> 4.
  CHECK_FALSE(ao.leq(g.id_of(GroupElement{1, {2, 3, 0, 1}, {0, 0, 0, 0}}), c));
  CHECK(ao.interval(c).size() == 14);

  // Independent length oracle: smallest k with w in R^k by repeated set products.
  for (auto [d, r, n] : std::vector<std::tuple<int, int, int>>{{2, 1, 3}, {3, 3, 3}, {3, 1, 2}}) {
    auto h = ReflectionGroup::build(d, r, n);
    AbsoluteOrder lengths(h);
    std::set<ElementId> reached{h.identity()};
    std::set<ElementId> shell{h.identity()};
    for (int k = 1; reached.size() < h.size(); ++k) {
      std::set<ElementId> next;
      for (ElementId t : h.reflections()) {
        for (ElementId w : shell) {
          const ElementId tw = h.mul(t, w);
          if (!reached.count(tw)) next.insert(tw);
        }
      }
      for (ElementId w : next) CHECK(lengths.length(w) == k);
      reached.insert(next.begin(), next.end());
      shell = next;
    }
    for (ElementId w = 0; w < h.size(); ++w) {
      CHECK(lengths.length(w) >= h.rank() - h.fixed_space_dim(w));
    }
  }
}

TEST_CASE("noncrossing intervals") {
  for (auto [d, r, n] : std::vector<std::tuple<int, int, int>>{
           {1, 1, 4}, {2, 1, 2}, {2, 2, 4}, {2, 1, 3}, {3, 3, 3}, {3, 1, 2}, {5, 5, 2}}) {
    auto g = ReflectionGroup::build(d, r, n);
    AbsoluteOrder ao(g);
    const ElementId c = g.coxeter_element();
    const auto nc = ao.interval(c);
    std::uint64_t num = 1;
    for (int di : g.descriptor().degrees) num *= static_cast<std::uint64_t>(g.descriptor().h + di);
    CAPTURE(g.descriptor().name());
    CHECK(nc.size() * g.size() == num);
    for (ElementId u : nc) {
      CHECK(ao.length(u) + ao.length(g.mul(g.inverse(u), c)) == g.rank());
      CHECK(ao.length(u) == g.rank() - g.fixed_space_dim(u));
    }
    const auto cls = g.conjugacy_class(c);
    CHECK(ao.interval(cls.back()).size() == nc.size());
  }
}
