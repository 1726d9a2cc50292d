#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "crglab/element.hpp"

namespace crg {

/// Canonical encoding of a subspace of the intersection lattice.
///
/// Coordinates with block[j] == -1 are forced to zero. The remaining
/// coordinates are grouped into blocks numbered by increasing minimum
/// coordinate; inside a block, v_j = zeta_d^{offset[j]} * v_min, so the
/// minimum coordinate of every block carries offset 0. Two encodings are
/// equal iff they describe the same subspace.
struct Flat {
  int d = 1;
  std::vector<std::int8_t> block;
  std::vector<std::uint8_t> offset;
  int num_blocks = 0;

  int n() const { return static_cast<int>(block.size()); }
  /// Dimension inside the irreducible representation.
  int dim() const { return d == 1 ? num_blocks - 1 : num_blocks; }
  int rank() const { return d == 1 ? n() - 1 : n(); }
  int codim() const { return rank() - dim(); }

  std::vector<int> zeros() const;
  std::vector<std::vector<int>> blocks() const;

  bool operator==(const Flat&) const = default;
  auto operator<=>(const Flat&) const = default;
};

struct FlatHash {
  std::size_t operator()(const Flat& f) const noexcept;
};

Flat full_space(int d, int n);

/// Fixed space V^w.
Flat flat_of(const GroupElement& w);

/// Image w . Z = { w v : v in Z }.
Flat act(const GroupElement& w, const Flat& z);

/// Intersection of two flats of the same group, computed by merging block
/// constraints; conflicting offsets force the merged coordinates to zero.
Flat intersect(const Flat& a, const Flat& b);

/// True iff inner is a subspace of outer.
bool contains(const Flat& outer, const Flat& inner);

/// True iff w fixes every vector of z.
bool fixes_pointwise(const GroupElement& w, const Flat& z);

/// Numerical membership of a vector of the ambient C^n, with absolute
/// tolerance tol.
bool contains_point(const Flat& z, std::span<const std::complex<double>> v, double tol);

/// e.g. "{1,2}{3,4}" or "0:{1} {2}" with offsets as "2^1".
std::string to_string(const Flat& z);

}  // namespace crg
