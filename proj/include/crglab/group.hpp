#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "crglab/element.hpp"
#include "crglab/flat.hpp"

namespace crg {

using ElementId = std::uint32_t;

/// Numerology of an irreducible well-generated G(d, r, n), r in {1, d}.
struct GroupDescriptor {
  int d = 1;
  int r = 1;
  int n = 1;
  int rank = 0;
  std::uint64_t order = 0;
  std::vector<int> degrees;  // ascending
  int h = 0;                 // Coxeter number, the largest degree
  int num_hyperplanes = 0;   // N
  int num_reflections = 0;   // N*

  bool is_symmetric() const { return d == 1; }
  /// "S4", "G(2,1,3)", ...
  std::string name() const;
};

struct BuildOptions {
  std::uint64_t max_order = 1'000'000;
};

/// Error raised for parameter combinations outside the supported families.
class UnsupportedGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Degrees from the closed-form family tables.
std::vector<int> family_degrees(int d, int r, int n);

/// Fully materialized G(d, r, n). Elements are indexed 0..|W|-1 in
/// lexicographic (perm, weights) order, so id 0 is the identity. Immutable
/// after build(), and safe to share between threads.
class ReflectionGroup {
 public:
  static ReflectionGroup build(int d, int r, int n, const BuildOptions& opts = {});

  const GroupDescriptor& descriptor() const { return desc_; }
  int d() const { return desc_.d; }
  int r() const { return desc_.r; }
  int n() const { return desc_.n; }
  int rank() const { return desc_.rank; }
  std::size_t size() const { return count_; }

  GroupElement element(ElementId id) const;
  std::optional<ElementId> find(const GroupElement& w) const;
  /// Throws std::invalid_argument for non-members.
  ElementId id_of(const GroupElement& w) const;
  ElementId identity() const { return 0; }

  /// Matrix product M_a * M_b.
  ElementId mul(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const { return inverse_[a]; }
  /// g^{-1} x g
  ElementId conjugate(ElementId x, ElementId g) const;
  int order_of(ElementId a) const;

  int fixed_space_dim(ElementId a) const;
  Flat fixed_flat(ElementId a) const;

  std::span<const ElementId> reflections() const { return reflections_; }
  /// Distinct reflecting hyperplanes, sorted canonically.
  std::span<const Flat> hyperplanes() const { return hyperplanes_; }

  /// A Coxeter element: the standard candidate when it passes the numerical
  /// regularity test, otherwise the first regular element of order h found
  /// by exhaustive scan.
  ElementId coxeter_element() const { return coxeter_; }

  /// True iff a has an exp(2 pi i / h)-eigenvector lying on no reflecting
  /// hyperplane (numerical test, relative tolerance 1e-9).
  bool is_regular(ElementId a) const;
  /// Exhaustive scan for regular elements in the sense of is_regular.
  std::vector<ElementId> regular_elements() const;
  std::vector<ElementId> conjugacy_class(ElementId a) const;

 private:
  ReflectionGroup() = default;
  std::uint64_t key(const std::uint8_t* perm, const std::uint8_t* weights) const;
  const std::uint8_t* perm_ptr(ElementId id) const { return &perms_[static_cast<std::size_t>(id) * n_]; }
  const std::uint8_t* weight_ptr(ElementId id) const { return &weights_[static_cast<std::size_t>(id) * n_]; }
  ElementId lookup(std::uint64_t k) const;

  GroupDescriptor desc_;
  std::size_t n_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> perms_;
  std::vector<std::uint8_t> weights_;
  std::unordered_map<std::uint64_t, ElementId> index_;
  std::vector<ElementId> inverse_;
  std::vector<ElementId> reflections_;
  std::vector<Flat> hyperplanes_;
  ElementId coxeter_ = 0;
};

}  // namespace crg
