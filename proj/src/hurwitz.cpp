#include "crglab/hurwitz.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace crg {

Tuple hurwitz_move(const ReflectionGroup& g, const Tuple& t, std::size_t i, MoveDirection dir) {
  if (t.size() < 2 || i + 1 >= t.size()) throw std::out_of_range("hurwitz_move: index out of range");
  Tuple out = t;
  const ElementId a = t[i];
  const ElementId b = t[i + 1];
  if (dir == MoveDirection::forward) {
    out[i] = b;
    out[i + 1] = g.conjugate(a, b);
  } else {
    out[i] = g.conjugate(b, g.inverse(a));
    out[i + 1] = a;
  }
  return out;
}

std::vector<Tuple> hurwitz_orbit(const ReflectionGroup& g, const Tuple& seed, std::size_t cap) {
  std::set<Tuple> seen{seed};
  std::vector<Tuple> frontier{seed};
  while (!frontier.empty()) {
    std::vector<Tuple> next;
    for (const auto& t : frontier) {
      for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        for (auto dir : {MoveDirection::forward, MoveDirection::inverse}) {
          auto u = hurwitz_move(g, t, i, dir);
          if (seen.insert(u).second) {
            if (seen.size() > cap) throw std::length_error("hurwitz_orbit: orbit exceeds the configured cap");
            next.push_back(std::move(u));
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

OrbitCensus orbit_census(const FactorizationEngine& engine, std::span<const int> passport) {
  OrbitCensus out;
  out.passport.assign(passport.begin(), passport.end());
  std::sort(out.passport.begin(), out.passport.end());
  const auto members = engine.passport_class(out.passport);
  if (members.empty()) throw std::invalid_argument("orbit_census: passport is not realized");
  out.class_size = members.size();
  std::set<Tuple> remaining(members.begin(), members.end());
  while (!remaining.empty()) {
    const auto orbit = hurwitz_orbit(engine.group(), *remaining.begin());
    for (const auto& t : orbit) {
      if (!remaining.erase(t)) throw std::logic_error("Hurwitz orbit left its passport class");
    }
    out.orbit_sizes.push_back(orbit.size());
  }
  return out;
}

PrimitiveOrbit primitive_orbit(const FactorizationEngine& engine, int orbit) {
  const auto& lat = engine.lattice();
  const auto& orb = lat.orbits().at(static_cast<std::size_t>(orbit));
  PrimitiveOrbit out;
  out.orbit = orbit;
  out.primitive_count = engine.primitive_count(orbit).count;
  if (orb.codim == 0 || orb.dim == 0) {
    // (c) itself, or a pure reflection factorization prefixed by the identity.
    std::vector<int> comp(static_cast<std::size_t>(engine.group().rank()), 1);
    if (orb.dim == 0) comp = {engine.group().rank()};
    const auto all = engine.enumerate_block(comp);
    const auto o = hurwitz_orbit(engine.group(), all.front());
    out.orbit_size = o.size();
    out.primitive_members = o.size();
    return out;
  }
  std::vector<int> comp{orb.codim};
  comp.resize(static_cast<std::size_t>(orb.dim) + 1, 1);
  Tuple seed;
  for (const auto& t : engine.enumerate_block(comp)) {
    if (lat.orbit_of_element(t.front()) == orbit) {
      seed = t;
      break;
    }
  }
  if (seed.empty()) return out;
  const auto o = hurwitz_orbit(engine.group(), seed);
  out.orbit_size = o.size();
  const auto& ao = engine.order();
  for (const auto& t : o) {
    if (ao.length(t.front()) != orb.codim || lat.orbit_of_element(t.front()) != orbit) continue;
    bool rest_reflections = true;
    for (std::size_t i = 1; i < t.size(); ++i) rest_reflections = rest_reflections && ao.length(t[i]) == 1;
    if (rest_reflections) ++out.primitive_members;
  }
  return out;
}

}  // namespace crg
