#include "crglab/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace crg {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// Monomial action of g in N_W(Z) on the block coordinates of Z: block b
// (minimum m) goes to the block of perm(m) with weight w_m - offset(perm(m)).
GroupElement block_action(const GroupElement& g, const Flat& z) {
  GroupElement out;
  out.d = z.d;
  const auto nb = static_cast<std::size_t>(z.num_blocks);
  out.perm.resize(nb);
  out.weights.resize(nb);
  const auto blocks = z.blocks();
  for (std::size_t b = 0; b < nb; ++b) {
    const auto m = static_cast<std::size_t>(blocks[b].front());
    const auto image = g.perm[m];
    const int target = z.block[image];
    if (target < 0) throw std::logic_error("block_action: element does not stabilize the flat");
    out.perm[b] = static_cast<std::uint8_t>(target);
    out.weights[b] = static_cast<std::uint8_t>(((g.weights[m] - z.offset[image]) % z.d + z.d) % z.d);
  }
  return out;
}

int fixed_dim_on_z(const GroupElement& a) {
  int fixed = 0;
  for (const auto& cyc : cycles(a)) fixed += cycle_weight(a, cyc) == 0 ? 1 : 0;
  return a.d == 1 ? fixed - 1 : fixed;
}

}  // namespace

std::vector<int> parabolic_degrees(const Flat& z, int r) {
  std::vector<int> deg;
  const int k0 = static_cast<int>(z.zeros().size());
  const int d = z.d;
  if (k0 > 0) {
    if (r == 1) {
      for (int i = 1; i <= k0; ++i) deg.push_back(i * d);
    } else {
      for (int i = 1; i < k0; ++i) deg.push_back(i * d);
      deg.push_back(k0);
    }
  }
  for (const auto& blk : z.blocks()) {
    for (int i = 2; i <= static_cast<int>(blk.size()); ++i) deg.push_back(i);
  }
  std::erase_if(deg, [](int x) { return x <= 1; });
  std::sort(deg.begin(), deg.end());
  return deg;
}

std::string parabolic_name(const Flat& z, int r) {
  std::map<std::string, int> parts;
  const int k0 = static_cast<int>(z.zeros().size());
  const int d = z.d;
  if (k0 > 0) {
    std::ostringstream os;
    if (d == 2) {
      os << (r == 1 ? "B" : "D") << k0;
    } else {
      os << "G(" << d << "," << (r == 1 ? 1 : d) << "," << k0 << ")";
    }
    ++parts[os.str()];
  }
  for (const auto& blk : z.blocks()) {
    if (blk.size() >= 2) ++parts["A" + std::to_string(blk.size() - 1)];
  }
  if (parts.empty()) return "1";
  std::string out;
  for (const auto& [name, count] : parts) {
    if (!out.empty()) out += "x";
    out += name;
    if (count > 1) out += "^" + std::to_string(count);
  }
  return out;
}

std::optional<std::vector<int>> molien_degrees(const std::vector<GroupElement>& group, int dim) {
  if (group.empty()) return std::nullopt;
  const std::size_t order = group.size();
  const std::size_t terms = order + 2;
  std::vector<std::complex<double>> total(terms, 0.0);
  std::vector<std::complex<double>> series(terms);
  for (const auto& g : group) {
    std::fill(series.begin(), series.end(), 0.0);
    series[0] = 1.0;
    // 1 / det(1 - q g) = prod over cycles 1 / (1 - zeta^{s} q^{L})
    for (const auto& cyc : cycles(g)) {
      const auto len = cyc.size();
      const auto root = std::polar(1.0, 2.0 * std::numbers::pi * cycle_weight(g, cyc) / g.d);
      for (std::size_t k = len; k < terms; ++k) series[k] += root * series[k - len];
    }
    for (std::size_t k = 0; k < terms; ++k) total[k] += series[k];
  }
  std::vector<std::int64_t> coeffs(terms);
  for (std::size_t k = 0; k < terms; ++k) {
    auto c = total[k] / static_cast<double>(order);
    if (group.front().d == 1 && k > 0) c -= total[k - 1] / static_cast<double>(order);
    const double rounded = std::round(c.real());
    if (std::abs(c - std::complex<double>(rounded, 0.0)) > 1e-6) return std::nullopt;
    coeffs[k] = static_cast<std::int64_t>(rounded);
  }
  if (coeffs[0] != 1) return std::nullopt;
  std::vector<int> degrees;
  for (;;) {
    std::size_t k = 1;
    while (k < terms && coeffs[k] == 0) ++k;
    if (k == terms) break;
    if (coeffs[k] < 0 || static_cast<int>(degrees.size()) >= dim) return std::nullopt;
    degrees.push_back(static_cast<int>(k));
    for (std::size_t j = terms; j-- > k;) coeffs[j] -= coeffs[j - k];
  }
  if (static_cast<int>(degrees.size()) != dim) {
    // Degree-1 invariants are peeled above; missing ones mean a bad series.
    return std::nullopt;
  }
  std::uint64_t prod = 1;
  for (int x : degrees) prod *= static_cast<std::uint64_t>(x);
  if (prod != order) return std::nullopt;
  return degrees;
}

namespace {

std::vector<Flat> sorted_flats(std::set<Flat> distinct) {
  std::vector<Flat> out(distinct.begin(), distinct.end());
  std::stable_sort(out.begin(), out.end(), [](const Flat& a, const Flat& b) { return a.dim() > b.dim(); });
  return out;
}

}  // namespace

FlatLattice::FlatLattice(const ReflectionGroup& g) : g_(&g) { build(nullptr); }

FlatLattice::FlatLattice(const ReflectionGroup& g, const LatticeData& data) : g_(&g) { build(&data); }

LatticeData FlatLattice::data() const {
  LatticeData out;
  out.flats = flats_;
  for (const auto& orb : orbits_) out.orbits.push_back(orb.members);
  return out;
}

void FlatLattice::build(const LatticeData* seed) {
  const ReflectionGroup& g = *g_;
  std::set<Flat> distinct;
  std::vector<Flat> per_element;
  per_element.reserve(g.size());
  for (ElementId w = 0; w < g.size(); ++w) {
    per_element.push_back(g.fixed_flat(w));
    distinct.insert(per_element.back());
  }
  flats_ = sorted_flats(std::move(distinct));
  if (seed && seed->flats != flats_) throw std::invalid_argument("cached flats disagree with the group");
  for (std::size_t i = 0; i < flats_.size(); ++i) ids_.emplace(flats_[i], static_cast<FlatId>(i));
  element_flat_.reserve(g.size());
  for (const auto& z : per_element) element_flat_.push_back(ids_.at(z));

  const std::size_t nf = flats_.size();
  for (std::size_t a = 0; a < nf; ++a) {
    for (std::size_t b = a + 1; b < nf; ++b) {
      if (!ids_.count(intersect(flats_[a], flats_[b]))) {
        throw std::logic_error("intersection lattice is not closed under intersection: " + to_string(flats_[a]) +
                               " and " + to_string(flats_[b]));
      }
    }
  }
  below_.assign(nf * nf, 0);
  for (std::size_t a = 0; a < nf; ++a) {
    for (std::size_t b = 0; b < nf; ++b) below_[a * nf + b] = crg::contains(flats_[a], flats_[b]) ? 1 : 0;
  }

  flat_orbit_.assign(nf, -1);
  if (seed) {
    for (const auto& members : seed->orbits) {
      FlatOrbit orb;
      orb.id = static_cast<int>(orbits_.size());
      if (members.empty() || !std::is_sorted(members.begin(), members.end())) {
        throw std::invalid_argument("cached orbit is empty or unsorted");
      }
      orb.representative = members.front();
      orb.members = members;
      for (FlatId m : members) {
        if (m >= nf || flat_orbit_[m] >= 0) throw std::invalid_argument("cached orbits do not partition the flats");
        flat_orbit_[m] = orb.id;
      }
      orbits_.push_back(std::move(orb));
    }
    if (std::find(flat_orbit_.begin(), flat_orbit_.end(), -1) != flat_orbit_.end()) {
      throw std::invalid_argument("cached orbits do not cover the flats");
    }
  }
  std::vector<GroupElement> elements;
  elements.reserve(g.size());
  for (ElementId w = 0; w < g.size(); ++w) elements.push_back(g.element(w));
  for (std::size_t z = 0; z < nf; ++z) {
    if (flat_orbit_[z] >= 0) continue;
    FlatOrbit orb;
    orb.id = static_cast<int>(orbits_.size());
    orb.representative = static_cast<FlatId>(z);
    std::set<FlatId> members;
    for (const auto& w : elements) members.insert(ids_.at(act(w, flats_[z])));
    orb.members.assign(members.begin(), members.end());
    for (FlatId m : orb.members) flat_orbit_[m] = orb.id;
    orbits_.push_back(std::move(orb));
  }

  for (auto& orb : orbits_) {
    const FlatId z = orb.representative;
    const Flat& rep = flats_[z];
    orb.dim = rep.dim();
    orb.codim = rep.codim();
    orb.pointwise_order = pointwise_stabilizer(z).size();
    orb.setwise_order = setwise_stabilizer(z).size();
    if (orb.setwise_order * orb.members.size() != g.size()) {
      throw std::logic_error("orbit-stabilizer mismatch for " + to_string(rep));
    }
    orb.index = orb.setwise_order / orb.pointwise_order;
    orb.char_poly = char_poly(z);
    std::vector<std::int64_t> roots;
    if (orb.char_poly.integer_roots(roots)) orb.os_exponents = roots;
    orb.parabolic_degrees = parabolic_degrees(rep, g.r());
    std::uint64_t prod = 1;
    for (int x : orb.parabolic_degrees) prod *= static_cast<std::uint64_t>(x);
    if (prod != orb.pointwise_order) throw std::logic_error("parabolic degrees disagree with |W_Z| for " + to_string(rep));
    orb.tag = std::to_string(orb.dim) + "|" + std::to_string(orb.pointwise_order) + "|" + join(orb.parabolic_degrees);
    orb.name = parabolic_name(rep, g.r());
  }
}

FlatId FlatLattice::id_of(const Flat& z) const {
  auto it = ids_.find(z);
  if (it == ids_.end()) throw std::invalid_argument("not a flat of the lattice: " + to_string(z));
  return it->second;
}

std::vector<ElementId> FlatLattice::pointwise_stabilizer(FlatId z) const {
  std::vector<ElementId> out;
  for (ElementId w = 0; w < g_->size(); ++w) {
    if (contains(element_flat_[w], z)) out.push_back(w);
  }
  return out;
}

std::vector<ElementId> FlatLattice::setwise_stabilizer(FlatId z) const {
  std::vector<ElementId> out;
  for (ElementId w = 0; w < g_->size(); ++w) {
    if (act(g_->element(w), flats_[z]) == flats_[z]) out.push_back(w);
  }
  return out;
}

IntPoly FlatLattice::char_poly(FlatId z) const {
  const std::size_t nf = flats_.size();
  std::vector<std::int64_t> mu(nf, 0);
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(flats_[z].dim() + 1), 0);
  // Ids are sorted by decreasing dimension, so every Y strictly above X
  // inside Z has a smaller id and its Moebius value is already known.
  for (std::size_t x = z; x < nf; ++x) {
    if (!contains(z, static_cast<FlatId>(x))) continue;
    if (x == z) {
      mu[x] = 1;
    } else {
      std::int64_t s = 0;
      for (std::size_t y = z; y < x; ++y) {
        if (mu[y] != 0 && contains(static_cast<FlatId>(y), static_cast<FlatId>(x)) && contains(z, static_cast<FlatId>(y))) {
          s += mu[y];
        }
      }
      mu[x] = -s;
    }
    coeffs[static_cast<std::size_t>(flats_[x].dim())] += mu[x];
  }
  return IntPoly(coeffs);
}

CzReport FlatLattice::cz_report(FlatId z) const {
  CzReport rep;
  const Flat& flat = flats_[z];
  const int dim = flat.dim();
  std::set<GroupElement> monomials;
  for (ElementId w : setwise_stabilizer(z)) monomials.insert(block_action(g_->element(w), flat));
  rep.action.assign(monomials.begin(), monomials.end());
  rep.order = rep.action.size();
  const std::uint64_t index = g_->size() / orbits_[static_cast<std::size_t>(flat_orbit_[z])].members.size() /
                              pointwise_stabilizer(z).size();
  if (rep.order != index) throw std::logic_error("C_Z action is not faithful on " + to_string(flat));

  std::vector<GroupElement> gens;
  for (const auto& a : rep.action) {
    if (fixed_dim_on_z(a) == dim - 1) gens.push_back(a);
  }
  rep.reflections_on_z = static_cast<int>(gens.size());
  std::set<GroupElement> closure;
  const auto id = GroupElement::identity(flat.d, flat.num_blocks);
  closure.insert(id);
  std::vector<GroupElement> frontier{id};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier) {
      for (const auto& t : gens) {
        auto y = multiply(x, t);
        if (closure.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  rep.is_reflection_group = closure.size() == rep.order;
  if (!rep.is_reflection_group) {
    rep.note = "C_Z is not generated by reflections on Z";
    return rep;
  }
  rep.degrees = molien_degrees(rep.action, dim);
  if (!rep.degrees) {
    rep.note = "Molien series did not resolve into degrees";
    return rep;
  }
  IntPoly num = IntPoly::constant(1);
  for (int i = 1; i <= dim; ++i) num = num * IntPoly::q_integer(g_->descriptor().h * i);
  IntPoly den = IntPoly::constant(1);
  for (int x : *rep.degrees) den = den * IntPoly::q_integer(x);
  IntPoly q;
  if (num.divide_exact(den, q)) {
    rep.q_polynomial = q;
  } else {
    rep.note = "q-analog is not a polynomial";
  }
  return rep;
}

}  // namespace crg
