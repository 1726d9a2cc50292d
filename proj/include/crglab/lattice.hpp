#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "crglab/flat.hpp"
#include "crglab/group.hpp"
#include "crglab/polynomial.hpp"

namespace crg {

using FlatId = std::uint32_t;

/// Quotient C_Z = N_W(Z)/W_Z acting on Z.
struct CzReport {
  std::uint64_t order = 0;
  /// Monomial matrices on the block coordinates of Z that realize C_Z.
  std::vector<GroupElement> action;
  int reflections_on_z = 0;
  bool is_reflection_group = false;
  /// Present when C_Z is reflection-generated and the Molien series peels
  /// cleanly into 1 / prod (1 - q^{d'_i}).
  std::optional<std::vector<int>> degrees;
  /// prod_{i=1}^{dim Z} [h i]_q / prod [d'_i]_q
  std::optional<IntPoly> q_polynomial;
  std::string note;
};

struct FlatOrbit {
  int id = 0;
  FlatId representative = 0;
  std::vector<FlatId> members;
  int dim = 0;
  int codim = 0;
  std::uint64_t pointwise_order = 0;  // |W_Z|
  std::uint64_t setwise_order = 0;    // |N_W(Z)|
  std::uint64_t index = 0;            // [N_W(Z) : W_Z]
  IntPoly char_poly;
  std::optional<std::vector<std::int64_t>> os_exponents;
  std::vector<int> parabolic_degrees;  // degrees > 1 of W_Z, ascending
  std::string tag;                     // "dim|W_Z|degrees"
  std::string name;                    // "A1^2", "B2", "1", ...

  std::size_t size() const { return members.size(); }
};

/// Serializable core of a lattice: flats in id order and the orbit
/// partition, each orbit as ascending flat ids.
struct LatticeData {
  std::vector<Flat> flats;
  std::vector<std::vector<FlatId>> orbits;
};

/// Intersection lattice L_W with its W-orbits. Flats are sorted by
/// decreasing dimension, then canonically, so id 0 is the full space.
class FlatLattice {
 public:
  explicit FlatLattice(const ReflectionGroup& g);
  /// Adopts cached data after checking it against the group; the orbit
  /// scan is skipped, the orbit-stabilizer check is not.
  FlatLattice(const ReflectionGroup& g, const LatticeData& data);
  LatticeData data() const;

  const ReflectionGroup& group() const { return *g_; }
  const std::vector<Flat>& flats() const { return flats_; }
  const Flat& flat(FlatId z) const { return flats_[z]; }
  FlatId id_of(const Flat& z) const;
  FlatId flat_of_element(ElementId w) const { return element_flat_[w]; }
  FlatId full_space() const { return 0; }
  FlatId origin() const { return static_cast<FlatId>(flats_.size() - 1); }

  /// inner is a subspace of outer
  bool contains(FlatId outer, FlatId inner) const { return below_[outer * flats_.size() + inner] != 0; }

  const std::vector<FlatOrbit>& orbits() const { return orbits_; }
  int orbit_of_flat(FlatId z) const { return flat_orbit_[z]; }
  int orbit_of_element(ElementId w) const { return flat_orbit_[element_flat_[w]]; }

  std::vector<ElementId> pointwise_stabilizer(FlatId z) const;
  std::vector<ElementId> setwise_stabilizer(FlatId z) const;

  /// chi(A^Z, t) = sum_{X subset Z} mu(Z, X) t^{dim X}
  IntPoly char_poly(FlatId z) const;
  CzReport cz_report(FlatId z) const;

 private:
  void build(const LatticeData* seed);

  const ReflectionGroup* g_;
  std::vector<Flat> flats_;
  std::unordered_map<Flat, FlatId, FlatHash> ids_;
  std::vector<FlatId> element_flat_;
  std::vector<char> below_;
  std::vector<int> flat_orbit_;
  std::vector<FlatOrbit> orbits_;
};

/// Degrees (> 1) of the parabolic subgroup fixing z pointwise, read off the
/// block structure: a reflection group of the ambient family on the zero
/// coordinates times a symmetric group per block.
std::vector<int> parabolic_degrees(const Flat& z, int r);
std::string parabolic_name(const Flat& z, int r);

/// Degrees of a finite group of monomial matrices from its Molien series,
/// assuming the invariant ring is polynomial. Returns nullopt when the
/// series does not round to integers or does not peel into
/// 1 / prod (1 - q^{d_i}) with prod d_i = |G|. For d == 1 the invariant
/// line is removed first.
std::optional<std::vector<int>> molien_degrees(const std::vector<GroupElement>& group, int dim);

}  // namespace crg
