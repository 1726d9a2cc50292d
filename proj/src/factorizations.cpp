#include "crglab/factorizations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace crg {

namespace {

std::int64_t factorial(int k) {
  std::int64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Product of factorials of the multiplicities in a sorted sequence.
std::int64_t automorphisms(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  std::int64_t out = 1;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    out *= factorial(static_cast<int>(j - i));
    i = j;
  }
  return out;
}

}  // namespace

Rational bezout_degree(std::span<const std::int64_t> numerator, std::span<const std::int64_t> denominator) {
  Rational out(1);
  for (auto x : numerator) out *= x;
  for (auto x : denominator) {
    if (x == 0) throw std::invalid_argument("bezout_degree: zero denominator degree");
    out /= x;
  }
  return out;
}

std::vector<std::vector<int>> compositions(int m) {
  std::vector<std::vector<int>> out;
  if (m <= 0) return out;
  // Bit i of mask set means a cut after position i + 1.
  for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < m - 1; ++i) {
      if (mask & (1u << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.push_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FactorizationEngine::FactorizationEngine(const AbsoluteOrder& order, const FlatLattice& lattice, ElementId c)
    : FactorizationEngine(order, lattice, c, order.interval(c)) {}

FactorizationEngine::FactorizationEngine(const AbsoluteOrder& order, const FlatLattice& lattice, ElementId c,
                                         std::vector<ElementId> nc)
    : g_(&order.group()), ao_(&order), lat_(&lattice), c_(c), nc_(std::move(nc)) {
  if (&lattice.group() != g_) throw std::invalid_argument("order and lattice belong to different groups");
  if (ao_->length(c) != g_->rank()) throw std::invalid_argument("c does not have full reflection length");
  if (!std::is_sorted(nc_.begin(), nc_.end()) || std::adjacent_find(nc_.begin(), nc_.end()) != nc_.end()) {
    throw std::invalid_argument("noncrossing elements must be strictly ascending");
  }
  for (ElementId u : nc_) {
    if (u >= g_->size() || !ao_->leq(u, c)) throw std::invalid_argument("element outside [1, c]");
  }
  nc_by_length_.resize(static_cast<std::size_t>(g_->rank() + 1));
  for (ElementId u : nc_) {
    if (ao_->length(u) != g_->rank() - g_->fixed_space_dim(u)) {
      throw std::logic_error("noncrossing element with length different from codimension");
    }
    nc_by_length_[static_cast<std::size_t>(ao_->length(u))].push_back(u);
  }
  reduced_memo_.assign(g_->size(), -1);
}

void FactorizationEngine::enumerate(ElementId x, std::span<const int> comp, Tuple& prefix, std::vector<Tuple>& out) const {
  if (comp.empty()) {
    if (x == g_->identity()) out.push_back(prefix);
    return;
  }
  const auto k = static_cast<std::size_t>(comp.front());
  if (comp.size() == 1) {
    if (static_cast<std::size_t>(ao_->length(x)) == k) {
      prefix.push_back(x);
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  for (ElementId u : nc_by_length_[k]) {
    if (!ao_->leq(u, x)) continue;
    prefix.push_back(u);
    enumerate(g_->mul(g_->inverse(u), x), comp.subspan(1), prefix, out);
    prefix.pop_back();
  }
}

std::uint64_t FactorizationEngine::count(ElementId x, std::span<const int> comp,
                                         std::unordered_map<std::uint64_t, std::uint64_t>& memo) const {
  if (comp.size() == 1) return static_cast<std::size_t>(ao_->length(x)) == static_cast<std::size_t>(comp.front()) ? 1 : 0;
  const std::uint64_t key = static_cast<std::uint64_t>(x) * 64 + comp.size();
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (ElementId u : nc_by_length_[static_cast<std::size_t>(comp.front())]) {
    if (ao_->leq(u, x)) total += count(g_->mul(g_->inverse(u), x), comp.subspan(1), memo);
  }
  memo.emplace(key, total);
  return total;
}

namespace {
void require_composition(std::span<const int> comp, int rank) {
  int sum = 0;
  for (int k : comp) {
    if (k <= 0) throw std::invalid_argument("composition parts must be positive");
    sum += k;
  }
  if (sum != rank || comp.empty()) throw std::invalid_argument("composition must sum to the rank");
}
}  // namespace

std::vector<Tuple> FactorizationEngine::enumerate_block(std::span<const int> composition) const {
  require_composition(composition, g_->rank());
  std::vector<Tuple> out;
  Tuple prefix;
  enumerate(c_, composition, prefix, out);
  return out;
}

std::vector<Tuple> FactorizationEngine::enumerate_red() const {
  const std::vector<int> ones(static_cast<std::size_t>(g_->rank()), 1);
  return enumerate_block(ones);
}

std::uint64_t FactorizationEngine::count_block(std::span<const int> composition) const {
  require_composition(composition, g_->rank());
  std::unordered_map<std::uint64_t, std::uint64_t> memo;
  return count(c_, composition, memo);
}

std::uint64_t FactorizationEngine::count_reduced(ElementId x) const {
  auto& slot = reduced_memo_[x];
  if (slot >= 0) return static_cast<std::uint64_t>(slot);
  std::uint64_t total = 0;
  if (x == g_->identity()) {
    total = 1;
  } else {
    for (ElementId t : nc_by_length_[1]) {
      if (ao_->leq(t, x)) total += count_reduced(g_->mul(g_->inverse(t), x));
    }
  }
  slot = static_cast<std::int64_t>(total);
  return total;
}

void FactorizationEngine::check_factorization(const Tuple& t) const {
  ElementId prod = g_->identity();
  int len = 0;
  for (ElementId w : t) {
    prod = g_->mul(prod, w);
    len += ao_->length(w);
    if (!std::binary_search(nc_.begin(), nc_.end(), w)) throw std::logic_error("factor outside NC(W)");
  }
  if (prod != c_) throw std::logic_error("factor product differs from c");
  if (len != g_->rank()) throw std::logic_error("factorization is not length additive");
}

std::vector<int> FactorizationEngine::ordered_passport(const Tuple& t) const {
  std::vector<int> out;
  out.reserve(t.size());
  for (ElementId w : t) out.push_back(lat_->orbit_of_element(w));
  return out;
}

PrimitiveCount FactorizationEngine::primitive_count(int orbit) const {
  const auto& orb = lat_->orbits().at(static_cast<std::size_t>(orbit));
  PrimitiveCount pc;
  pc.orbit = orbit;
  pc.index = orb.index;
  std::uint64_t num = static_cast<std::uint64_t>(factorial(orb.dim));
  for (int i = 0; i < orb.dim; ++i) num *= static_cast<std::uint64_t>(g_->descriptor().h);
  pc.formula_numerator = num;
  std::map<FlatId, std::uint64_t> by_flat;
  for (FlatId z : orb.members) by_flat[z] = 0;
  for (ElementId u : nc_by_length_[static_cast<std::size_t>(orb.codim)]) {
    if (lat_->orbit_of_element(u) != orbit) continue;
    const std::uint64_t k = count_reduced(g_->mul(g_->inverse(u), c_));
    pc.count += k;
    by_flat[lat_->flat_of_element(u)] += k;
  }
  for (const auto& [z, k] : by_flat) pc.per_flat.push_back(k);
  pc.per_flat_uniform = std::adjacent_find(pc.per_flat.begin(), pc.per_flat.end(), std::not_equal_to<>()) == pc.per_flat.end();
  pc.matches = pc.count * pc.index == pc.formula_numerator;
  return pc;
}

std::vector<KrewerasEntry> FactorizationEngine::kreweras() const {
  std::vector<KrewerasEntry> out(lat_->orbits().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& orb = lat_->orbits()[i];
    out[i].orbit = static_cast<int>(i);
    out[i].index = orb.index;
    out[i].chi_at_h_plus_1 = orb.char_poly.eval(g_->descriptor().h + 1);
    out[i].asserted = g_->d() <= 2;
  }
  for (ElementId u : nc_) ++out[static_cast<std::size_t>(lat_->orbit_of_element(u))].count;
  for (auto& e : out) {
    e.matches = static_cast<std::int64_t>(e.count * e.index) == e.chi_at_h_plus_1;
  }
  return out;
}

std::vector<Tuple> FactorizationEngine::passport_class(std::span<const int> passport) const {
  std::vector<int> sorted(passport.begin(), passport.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> codims;
  for (int o : sorted) codims.push_back(lat_->orbits().at(static_cast<std::size_t>(o)).codim);
  std::sort(codims.begin(), codims.end());
  if (std::find(codims.begin(), codims.end(), 0) != codims.end()) {
    throw std::invalid_argument("passport contains the trivial orbit");
  }
  std::vector<Tuple> out;
  do {
    for (auto& t : enumerate_block(codims)) {
      auto p = ordered_passport(t);
      std::sort(p.begin(), p.end());
      if (p == sorted) out.push_back(std::move(t));
    }
  } while (std::next_permutation(codims.begin(), codims.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PassportEntry> FactorizationEngine::passport_census() const {
  std::map<std::vector<int>, std::uint64_t> ordered;
  for (const auto& comp : compositions(g_->rank())) {
    for (const auto& t : enumerate_block(comp)) ++ordered[ordered_passport(t)];
  }
  std::map<std::vector<int>, PassportEntry> entries;
  for (const auto& [p, k] : ordered) {
    auto key = p;
    std::sort(key.begin(), key.end());
    auto& e = entries[key];
    e.passport = key;
    e.total += k;
  }
  const bool symmetric = g_->descriptor().is_symmetric();
  const auto h = static_cast<std::int64_t>(g_->descriptor().h);
  std::vector<PassportEntry> out;
  for (auto& [key, e] : entries) {
    for (int o : e.passport) e.codims.push_back(lat_->orbits()[static_cast<std::size_t>(o)].codim);
    auto perm = e.passport;
    do {
      auto it = ordered.find(perm);
      e.orderings.push_back({perm, it == ordered.end() ? 0 : it->second});
    } while (std::next_permutation(perm.begin(), perm.end()));
    e.invariant = std::all_of(e.orderings.begin(), e.orderings.end(),
                              [&](const OrderedCount& oc) { return oc.count == e.orderings.front().count; });
    if (symmetric) {
      const Rational aut(automorphisms(e.codims), automorphisms(e.passport));
      Rational closed = aut;
      for (std::size_t i = 1; i < e.passport.size(); ++i) closed *= h;
      for (int o : e.passport) {
        const auto& orb = lat_->orbits()[static_cast<std::size_t>(o)];
        closed *= Rational(factorial(orb.dim), static_cast<std::int64_t>(orb.index));
      }
      e.closed_form = closed;
      e.aut_times_ordered = aut * static_cast<std::int64_t>(e.orderings.front().count);
      std::uint64_t stratum = 0;
      for (const auto& oc : e.orderings) {
        bool same_codims = true;
        for (std::size_t i = 0; i < oc.passport.size(); ++i) {
          same_codims = same_codims && lat_->orbits()[static_cast<std::size_t>(oc.passport[i])].codim == e.codims[i];
        }
        if (same_codims) stratum += oc.count;
      }
      e.stratum_count = Rational(static_cast<std::int64_t>(stratum));
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace crg
