#include <doctest.h>

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <numbers>
#include <set>

#include "crglab/group.hpp"

using namespace crg;

namespace {

Eigen::MatrixXcd matrix_of(const GroupElement& w) {
  const int n = w.n();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const double ang = 2.0 * std::numbers::pi * w.weights[static_cast<std::size_t>(i)] / w.d;
    m(w.perm[static_cast<std::size_t>(i)], i) = std::polar(1.0, ang);
  }
  return m;
}

// Fixed-space dimension from the matrix, with the trivial line removed for S_n.
int numeric_fixed_dim(const GroupElement& w) {
  const int n = w.n();
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(matrix_of(w) - Eigen::MatrixXcd::Identity(n, n));
  lu.setThreshold(1e-9);
  return static_cast<int>(lu.dimensionOfKernel()) - (w.d == 1 ? 1 : 0);
}

// Shephard-Todd: sum_w t^{dim V^w} = prod (t + d_i - 1). Compares coefficients.
bool fixed_dim_census_matches(const ReflectionGroup& g) {
  std::vector<std::int64_t> census(static_cast<std::size_t>(g.rank() + 1), 0);
  for (ElementId id = 0; id < g.size(); ++id) ++census[static_cast<std::size_t>(numeric_fixed_dim(g.element(id)))];
  std::vector<std::int64_t> prod{1};
  for (int di : g.descriptor().degrees) {
    std::vector<std::int64_t> next(prod.size() + 1, 0);
    for (std::size_t k = 0; k < prod.size(); ++k) {
      next[k + 1] += prod[k];
      next[k] += prod[k] * (di - 1);
    }
    prod = next;
  }
  return prod == census;
}

}  // namespace

TEST_CASE("build_group numerology") {
  auto s4 = ReflectionGroup::build(1, 1, 4);
  CHECK(s4.size() == 24);
  CHECK(s4.rank() == 3);
  CHECK(s4.descriptor().degrees == std::vector<int>{2, 3, 4});
  CHECK(s4.descriptor().h == 4);

  auto b2 = ReflectionGroup::build(2, 1, 2);
  CHECK(b2.size() == 8);
  CHECK(b2.descriptor().degrees == std::vector<int>{2, 4});

  auto g333 = ReflectionGroup::build(3, 3, 3);
  CHECK(g333.size() == 54);
  CHECK(g333.descriptor().degrees == std::vector<int>{3, 3, 6});
  CHECK(g333.descriptor().h == 6);

  for (auto [d, r, n] : std::vector<std::tuple<int, int, int>>{
           {1, 1, 3}, {1, 1, 4}, {1, 1, 5}, {2, 1, 2}, {2, 1, 3}, {2, 2, 3}, {2, 2, 4}, {3, 1, 2}, {3, 3, 3}, {5, 5, 2}, {4, 1, 2}}) {
    auto g = ReflectionGroup::build(d, r, n);
    CAPTURE(g.descriptor().name());
    CHECK(fixed_dim_census_matches(g));
    const auto& desc = g.descriptor();
    CHECK(desc.h * desc.rank == desc.num_hyperplanes + desc.num_reflections);
  }
}

TEST_CASE("unsupported parameters are rejected") {
  CHECK_THROWS_AS(ReflectionGroup::build(1, 1, 1), UnsupportedGroup);
  CHECK_THROWS_AS(ReflectionGroup::build(3, 3, 1), UnsupportedGroup);
  CHECK_THROWS_AS(ReflectionGroup::build(2, 2, 2), UnsupportedGroup);
  CHECK_THROWS_AS(ReflectionGroup::build(4, 2, 3), UnsupportedGroup);
  BuildOptions small;
  small.max_order = 100;
  CHECK_THROWS_AS(ReflectionGroup::build(1, 1, 6, small), UnsupportedGroup);
}

TEST_CASE("multiply agrees with matrix products") {
  auto g = ReflectionGroup::build(3, 1, 2);
  for (ElementId a = 0; a < g.size(); ++a) {
    for (ElementId b = 0; b < g.size(); ++b) {
      const auto ab = g.element(g.mul(a, b));
      CHECK((matrix_of(ab) - matrix_of(g.element(a)) * matrix_of(g.element(b))).norm() < 1e-12);
    }
    CHECK(g.mul(a, g.inverse(a)) == g.identity());
  }
  auto s = GroupElement::identity(3, 2);
  s.weights[0] = 1;
  const auto e = GroupElement::identity(3, 2);
  CHECK(compose(e, s) == s);
  CHECK(compose(s, compose(s, s)) == e);
  CHECK(compose(s, s) != e);
}

TEST_CASE("group axioms on small groups") {
  for (auto [d, r, n] : std::vector<std::tuple<int, int, int>>{{1, 1, 4}, {2, 1, 3}, {3, 3, 3}}) {
    auto g = ReflectionGroup::build(d, r, n);
    if (g.size() > 200) continue;
    for (ElementId a = 0; a < g.size(); a += 3) {
      for (ElementId b = 0; b < g.size(); b += 5) {
        for (ElementId c = 0; c < g.size(); c += 7) {
          CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
        }
      }
      CHECK(g.mul(a, g.identity()) == a);
    }
  }
}

TEST_CASE("reflections and fixed spaces") {
  auto s4 = ReflectionGroup::build(1, 1, 4);
  CHECK(s4.descriptor().num_reflections == 6);
  CHECK(s4.descriptor().num_hyperplanes == 6);
  auto g312 = ReflectionGroup::build(3, 1, 2);
  CHECK(g312.descriptor().num_reflections == 7);
  CHECK(g312.descriptor().num_hyperplanes == 5);
  auto b2 = ReflectionGroup::build(2, 1, 2);
  CHECK(b2.descriptor().num_reflections == 4);
  CHECK(b2.descriptor().num_hyperplanes == 4);

  for (const auto* g : {&s4, &g312, &b2}) {
    std::set<ElementId> refl(g->reflections().begin(), g->reflections().end());
    for (ElementId id = 0; id < g->size(); ++id) {
      CHECK(numeric_fixed_dim(g->element(id)) == g->fixed_space_dim(id));
      CHECK((g->fixed_space_dim(id) == g->rank() - 1) == (refl.count(id) == 1));
    }
  }

  CHECK(fixed_space_dim(GroupElement::identity(1, 4)) == 3);
  GroupElement cyc{1, {1, 2, 3, 0}, {0, 0, 0, 0}};
  CHECK(fixed_space_dim(cyc) == 0);
  GroupElement diag{3, {0, 1}, {1, 0}};
  CHECK(fixed_space_dim(diag) == 1);
}

TEST_CASE("flat encodings") {
  GroupElement pp{1, {1, 0, 3, 2}, {0, 0, 0, 0}};
  const Flat z = flat_of(pp);
  CHECK(z.dim() == 1);
  CHECK(to_string(z) == "{1,2}{3,4}");
  GroupElement diag{3, {0, 1}, {1, 0}};
  const Flat zd = flat_of(diag);
  CHECK(zd.zeros() == std::vector<int>{0});
  CHECK(zd.dim() == 1);
  CHECK(flat_of(GroupElement::identity(1, 4)).dim() == 3);

  // {x1 = x2} meets {x1 = zeta x2} only at the origin.
  GroupElement t0{3, {1, 0}, {0, 0}};
  GroupElement t1{3, {1, 0}, {1, 2}};
  const Flat meet = intersect(flat_of(t0), flat_of(t1));
  CHECK(meet.dim() == 0);
  CHECK(meet.zeros() == std::vector<int>{0, 1});
}

TEST_CASE("Coxeter elements") {
  auto s3 = ReflectionGroup::build(1, 1, 3);
  CHECK(s3.order_of(s3.coxeter_element()) == 3);
  auto b2 = ReflectionGroup::build(2, 1, 2);
  const auto c = b2.element(b2.coxeter_element());
  CHECK(b2.order_of(b2.coxeter_element()) == 4);
  CHECK(c.perm == std::vector<std::uint8_t>{1, 0});
  CHECK((c.weights[0] + c.weights[1]) % 2 == 1);

  for (auto [d, r, n] : std::vector<std::tuple<int, int, int>>{
           {1, 1, 4}, {2, 1, 3}, {2, 2, 3}, {3, 1, 2}, {3, 3, 3}, {5, 5, 2}, {2, 2, 4}}) {
    auto g = ReflectionGroup::build(d, r, n);
    CAPTURE(g.descriptor().name());
    const auto regular = g.regular_elements();
    const auto cls = g.conjugacy_class(g.coxeter_element());
    CHECK(regular == cls);
    if (d == 1 && n == 4) CHECK(cls.size() == 6);
  }
}
