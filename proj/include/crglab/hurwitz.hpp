#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "crglab/factorizations.hpp"

namespace crg {

enum class MoveDirection { forward, inverse };

/// Hurwitz move at 0-based position i on a tuple of length >= 2:
///   forward: (g_i, g_{i+1}) -> (g_{i+1}, g_{i+1}^{-1} g_i g_{i+1})
///   inverse: (g_i, g_{i+1}) -> (g_i g_{i+1} g_i^{-1}, g_i)
/// Throws std::out_of_range for a bad index.
Tuple hurwitz_move(const ReflectionGroup& g, const Tuple& t, std::size_t i, MoveDirection dir);

/// Closure of seed under all moves, sorted. Throws std::length_error once
/// more than cap tuples have been reached.
std::vector<Tuple> hurwitz_orbit(const ReflectionGroup& g, const Tuple& seed, std::size_t cap = 10'000'000);

struct OrbitCensus {
  std::vector<int> passport;
  std::size_t class_size = 0;
  std::vector<std::size_t> orbit_sizes;  // in order of smallest member
};

/// Partition of all factorizations with the given unordered passport into
/// Hurwitz orbits. Throws std::invalid_argument for an unrealized passport.
OrbitCensus orbit_census(const FactorizationEngine& engine, std::span<const int> passport);

struct PrimitiveOrbit {
  int orbit = 0;
  std::size_t orbit_size = 0;      // full Hurwitz orbit of one primitive tuple
  std::size_t primitive_members = 0;  // members of the form (c_[Z], t_1, ..., t_k)
  std::uint64_t primitive_count = 0;
  bool transitive() const { return primitive_members == primitive_count; }
};

/// Hurwitz orbit of the first primitive factorization of type [Z], and how
/// many primitive factorizations of that type it reaches.
PrimitiveOrbit primitive_orbit(const FactorizationEngine& engine, int orbit);

}  // namespace crg
