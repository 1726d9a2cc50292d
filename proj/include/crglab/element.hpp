#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace crg {

/// A monomial matrix of G(d, r, n): basis vector e_i is sent to
/// zeta_d^{weights[i]} * e_{perm[i]}, with zeta_d = exp(2 pi i / d).
///
/// Product convention, used everywhere in the library:
///   multiply(a, b) is the matrix product M_a * M_b (b acts first).
///   compose(u, v) reads "u then v" and equals multiply(v, u).
/// A factorization c = w_1 w_2 ... w_k means M_c = M_{w_1} M_{w_2} ... M_{w_k}.
struct GroupElement {
  int d = 1;
  std::vector<std::uint8_t> perm;
  std::vector<std::uint8_t> weights;

  int n() const { return static_cast<int>(perm.size()); }
  static GroupElement identity(int d, int n);

  bool operator==(const GroupElement&) const = default;
  auto operator<=>(const GroupElement&) const = default;
};

GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement compose(const GroupElement& u, const GroupElement& v);
GroupElement inverse(const GroupElement& u);

/// Dimension of {v : w v = v} in the irreducible reflection representation.
/// Each cycle of perm contributes 1 iff its weight sum is 0 mod d; for the
/// symmetric group (d = 1) the invariant all-ones line is removed.
int fixed_space_dim(const GroupElement& w);

/// Cycles of perm as lists of 0-based coordinates, each starting at its
/// minimum, ordered by minimum.
std::vector<std::vector<int>> cycles(const GroupElement& w);

/// Sum of the weights over the coordinates of a cycle, reduced mod d.
int cycle_weight(const GroupElement& w, const std::vector<int>& cycle);

/// 1-based one-line notation plus weights, e.g. "[2,3,1|0,0,1]".
std::string to_string(const GroupElement& w);

/// Throws std::invalid_argument when the element is not a well-formed
/// member of G(d, r, n).
void validate(const GroupElement& w, int r);

}  // namespace crg
