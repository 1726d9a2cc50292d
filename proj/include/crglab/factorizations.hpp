#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "crglab/absolute_order.hpp"
#include "crglab/lattice.hpp"

namespace crg {

/// Ordered factor tuple; the product w_1 w_2 ... w_k is taken as a matrix
/// product in this order.
using Tuple = std::vector<ElementId>;
using Rational = boost::rational<std::int64_t>;

/// prod(numerator) / prod(denominator), exactly. Throws on a zero
/// denominator entry.
Rational bezout_degree(std::span<const std::int64_t> numerator, std::span<const std::int64_t> denominator);

/// All compositions of m into positive parts, in lexicographic order.
std::vector<std::vector<int>> compositions(int m);

struct PrimitiveCount {
  int orbit = 0;
  std::uint64_t count = 0;
  /// h^{dim Z} (dim Z)! and the index [N_W(Z) : W_Z]; the formula value is
  /// their quotient.
  std::uint64_t formula_numerator = 0;
  std::uint64_t index = 1;
  bool matches = false;
  /// Counts with the first factor fixing exactly a given flat of the orbit,
  /// in orbit-member order.
  std::vector<std::uint64_t> per_flat;
  bool per_flat_uniform = false;
};

struct KrewerasEntry {
  int orbit = 0;
  std::uint64_t count = 0;
  std::int64_t chi_at_h_plus_1 = 0;
  std::uint64_t index = 1;
  /// count * index == chi(h + 1)
  bool matches = false;
  /// Whether the identity is a theorem here (d <= 2) or only reported.
  bool asserted = false;
};

struct OrderedCount {
  std::vector<int> passport;
  std::uint64_t count = 0;
};

struct PassportEntry {
  std::vector<int> passport;  // orbit ids, ascending
  std::vector<int> codims;    // codimensions in passport order
  std::uint64_t total = 0;    // factorizations with this unordered passport
  /// Every distinct ordering of the passport, including unrealized ones.
  std::vector<OrderedCount> orderings;
  bool invariant = false;
  /// Symmetric groups only: the closed-form local degree, the product of
  /// the automorphism ratio with one ordered count, and the number of
  /// factorizations with the codimension sequence of `codims` and this
  /// unordered passport.
  std::optional<Rational> closed_form;
  std::optional<Rational> aut_times_ordered;
  std::optional<Rational> stratum_count;
  bool closed_form_matches() const {
    return closed_form && *closed_form == *aut_times_ordered && *closed_form == *stratum_count;
  }
};

/// Enumeration of length-additive factorizations of a Coxeter element c.
class FactorizationEngine {
 public:
  FactorizationEngine(const AbsoluteOrder& order, const FlatLattice& lattice, ElementId c);
  /// Adopts a precomputed interval [1, c] (ascending ids). Membership is
  /// checked; completeness is the caller's responsibility.
  FactorizationEngine(const AbsoluteOrder& order, const FlatLattice& lattice, ElementId c, std::vector<ElementId> nc);

  const ReflectionGroup& group() const { return *g_; }
  const AbsoluteOrder& order() const { return *ao_; }
  const FlatLattice& lattice() const { return *lat_; }
  ElementId coxeter() const { return c_; }
  const std::vector<ElementId>& nc() const { return nc_; }

  /// Exhaustive, duplicate-free and in lexicographic order of factor ids.
  std::vector<Tuple> enumerate_block(std::span<const int> composition) const;
  std::vector<Tuple> enumerate_red() const;
  std::uint64_t count_block(std::span<const int> composition) const;
  /// |Red(x)| for x <= c.
  std::uint64_t count_reduced(ElementId x) const;

  /// Throws std::logic_error naming the violated invariant.
  void check_factorization(const Tuple& t) const;
  std::vector<int> ordered_passport(const Tuple& t) const;

  PrimitiveCount primitive_count(int orbit) const;
  std::vector<KrewerasEntry> kreweras() const;
  std::vector<PassportEntry> passport_census() const;

  /// All factorizations whose unordered passport is `passport`.
  std::vector<Tuple> passport_class(std::span<const int> passport) const;

 private:
  void enumerate(ElementId x, std::span<const int> comp, Tuple& prefix, std::vector<Tuple>& out) const;
  std::uint64_t count(ElementId x, std::span<const int> comp, std::unordered_map<std::uint64_t, std::uint64_t>& memo) const;

  const ReflectionGroup* g_;
  const AbsoluteOrder* ao_;
  const FlatLattice* lat_;
  ElementId c_;
  std::vector<ElementId> nc_;
  std::vector<std::vector<ElementId>> nc_by_length_;
  mutable std::vector<std::int64_t> reduced_memo_;
};

}  // namespace crg
