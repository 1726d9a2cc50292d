#include "crglab/group.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace crg {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

void validate_parameters(int d, int r, int n) {
  if (d < 1 || n < 1) throw UnsupportedGroup("G(d,r,n) requires d >= 1 and n >= 1");
  if (d > 255 || n > 20) throw UnsupportedGroup("G(d,r,n) supports d <= 255 and n <= 20");
  if (r != 1 && r != d) throw UnsupportedGroup("G(d,r,n) with 1 < r < d is not well-generated");
  if (r < 1 || d % r != 0) throw UnsupportedGroup("r must divide d");
  if (d == 1 && n < 2) throw UnsupportedGroup("G(1,1,n) is reducible for n < 2");
  if (d > 1 && r == d) {
    if (n == 1) throw UnsupportedGroup("G(d,d,1) is trivial");
    if (n == 2 && d < 3) throw UnsupportedGroup("G(2,2,2) is reducible");
  }
}

}  // namespace

std::string GroupDescriptor::name() const {
  std::ostringstream os;
  if (d == 1) {
    os << "S" << n;
  } else {
    os << "G(" << d << "," << r << "," << n << ")";
  }
  return os.str();
}

std::vector<int> family_degrees(int d, int r, int n) {
  std::vector<int> deg;
  if (d == 1) {
    for (int i = 2; i <= n; ++i) deg.push_back(i);
  } else if (r == 1) {
    for (int i = 1; i <= n; ++i) deg.push_back(i * d);
  } else {
    for (int i = 1; i < n; ++i) deg.push_back(i * d);
    deg.push_back(n);
  }
  std::sort(deg.begin(), deg.end());
  return deg;
}

std::uint64_t ReflectionGroup::key(const std::uint8_t* perm, const std::uint8_t* weights) const {
  // Lehmer rank of the permutation, then the weights as base-d digits.
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n_; ++j) smaller += perm[j] < perm[i] ? 1 : 0;
    rank = rank * (n_ - i) + smaller;
  }
  std::uint64_t code = rank;
  for (std::size_t i = 0; i < n_; ++i) code = code * static_cast<std::uint64_t>(desc_.d) + weights[i];
  return code;
}

ElementId ReflectionGroup::lookup(std::uint64_t k) const {
  auto it = index_.find(k);
  if (it == index_.end()) throw std::logic_error("ReflectionGroup: product left the group");
  return it->second;
}

ReflectionGroup ReflectionGroup::build(int d, int r, int n, const BuildOptions& opts) {
  validate_parameters(d, r, n);
  const std::uint64_t nf = factorial(n);
  const long double estimate = std::pow(static_cast<long double>(d), n) * static_cast<long double>(nf) / r;
  if (estimate > static_cast<long double>(opts.max_order) + 0.5L) {
    throw UnsupportedGroup("group order exceeds the configured cap");
  }
  std::uint64_t dn = 1;
  for (int i = 0; i < n; ++i) dn *= static_cast<std::uint64_t>(d);

  ReflectionGroup g;
  g.desc_.d = d;
  g.desc_.r = r;
  g.desc_.n = n;
  g.desc_.rank = d == 1 ? n - 1 : n;
  g.desc_.order = dn * nf / static_cast<std::uint64_t>(r);
  g.desc_.degrees = family_degrees(d, r, n);
  g.desc_.h = g.desc_.degrees.back();
  g.n_ = static_cast<std::size_t>(n);

  const std::uint64_t deg_product =
      std::accumulate(g.desc_.degrees.begin(), g.desc_.degrees.end(), std::uint64_t{1},
                      [](std::uint64_t a, int b) { return a * static_cast<std::uint64_t>(b); });
  if (deg_product != g.desc_.order) throw std::logic_error("degree table inconsistent with |W|");

  g.perms_.reserve(g.desc_.order * g.n_);
  g.weights_.reserve(g.desc_.order * g.n_);
  std::vector<std::uint8_t> perm(g.n_);
  std::iota(perm.begin(), perm.end(), std::uint8_t{0});
  std::vector<std::uint8_t> w(g.n_);
  do {
    std::fill(w.begin(), w.end(), std::uint8_t{0});
    for (std::uint64_t code = 0; code < dn; ++code) {
      std::uint64_t c = code;
      int total = 0;
      for (std::size_t i = g.n_; i-- > 0;) {
        w[i] = static_cast<std::uint8_t>(c % static_cast<std::uint64_t>(d));
        total += w[i];
        c /= static_cast<std::uint64_t>(d);
      }
      if (r == d && total % d != 0) continue;
      g.perms_.insert(g.perms_.end(), perm.begin(), perm.end());
      g.weights_.insert(g.weights_.end(), w.begin(), w.end());
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  g.count_ = g.perms_.size() / g.n_;
  if (g.count_ != g.desc_.order) throw std::logic_error("element enumeration does not match |W|");

  g.index_.reserve(g.count_ * 2);
  for (std::size_t id = 0; id < g.count_; ++id) {
    const auto eid = static_cast<ElementId>(id);
    g.index_.emplace(g.key(g.perm_ptr(eid), g.weight_ptr(eid)), eid);
  }

  g.inverse_.resize(g.count_);
  for (std::size_t id = 0; id < g.count_; ++id) {
    g.inverse_[id] = g.id_of(crg::inverse(g.element(static_cast<ElementId>(id))));
  }

  std::set<Flat> hyperplanes;
  for (std::size_t id = 0; id < g.count_; ++id) {
    const auto eid = static_cast<ElementId>(id);
    if (g.fixed_space_dim(eid) == g.desc_.rank - 1) {
      g.reflections_.push_back(eid);
      hyperplanes.insert(g.fixed_flat(eid));
    }
  }
  g.hyperplanes_.assign(hyperplanes.begin(), hyperplanes.end());
  g.desc_.num_reflections = static_cast<int>(g.reflections_.size());
  g.desc_.num_hyperplanes = static_cast<int>(g.hyperplanes_.size());

  // Standard candidate: an n-cycle carrying total weight 1 for G(d,1,n), or
  // an (n-1)-cycle of weight 1 times zeta^{-1} on the last coordinate for
  // G(d,d,n).
  GroupElement cand = GroupElement::identity(d, n);
  if (d == 1 || r == 1) {
    for (int i = 0; i < n; ++i) cand.perm[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((i + 1) % n);
    if (d > 1) cand.weights[static_cast<std::size_t>(n - 1)] = 1;
  } else {
    for (int i = 0; i < n - 1; ++i) cand.perm[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((i + 1) % (n - 1));
    cand.weights[static_cast<std::size_t>(n - 2)] = 1;
    cand.weights[static_cast<std::size_t>(n - 1)] = static_cast<std::uint8_t>(d - 1);
  }
  const ElementId cand_id = g.id_of(cand);
  if (g.order_of(cand_id) == g.desc_.h && g.is_regular(cand_id)) {
    g.coxeter_ = cand_id;
  } else {
    const auto regular = g.regular_elements();
    if (regular.empty()) throw std::logic_error("no Coxeter element found: arithmetic inconsistency");
    g.coxeter_ = regular.front();
  }
  return g;
}

GroupElement ReflectionGroup::element(ElementId id) const {
  GroupElement e;
  e.d = desc_.d;
  e.perm.assign(perm_ptr(id), perm_ptr(id) + n_);
  e.weights.assign(weight_ptr(id), weight_ptr(id) + n_);
  return e;
}

std::optional<ElementId> ReflectionGroup::find(const GroupElement& w) const {
  if (w.d != desc_.d || w.n() != desc_.n) return std::nullopt;
  try {
    validate(w, desc_.r);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  auto it = index_.find(key(w.perm.data(), w.weights.data()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId ReflectionGroup::id_of(const GroupElement& w) const {
  auto id = find(w);
  if (!id) throw std::invalid_argument("element " + to_string(w) + " is not in " + desc_.name());
  return *id;
}

ElementId ReflectionGroup::mul(ElementId a, ElementId b) const {
  std::uint8_t perm[32];
  std::uint8_t weights[32];
  const auto* pa = perm_ptr(a);
  const auto* wa = weight_ptr(a);
  const auto* pb = perm_ptr(b);
  const auto* wb = weight_ptr(b);
  for (std::size_t i = 0; i < n_; ++i) {
    const auto j = pb[i];
    perm[i] = pa[j];
    weights[i] = static_cast<std::uint8_t>((wb[i] + wa[j]) % desc_.d);
  }
  return lookup(key(perm, weights));
}

ElementId ReflectionGroup::conjugate(ElementId x, ElementId g) const { return mul(inverse(g), mul(x, g)); }

int ReflectionGroup::order_of(ElementId a) const {
  int k = 1;
  ElementId p = a;
  while (p != identity()) {
    p = mul(p, a);
    ++k;
  }
  return k;
}

int ReflectionGroup::fixed_space_dim(ElementId a) const { return crg::fixed_space_dim(element(a)); }

Flat ReflectionGroup::fixed_flat(ElementId a) const { return flat_of(element(a)); }

bool ReflectionGroup::is_regular(ElementId a) const {
  using Mat = Eigen::MatrixXcd;
  const int n = desc_.n;
  const auto w = element(a);
  Mat m = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const double ang = 2.0 * std::numbers::pi * w.weights[static_cast<std::size_t>(i)] / desc_.d;
    m(w.perm[static_cast<std::size_t>(i)], i) = std::polar(1.0, ang);
  }
  const std::complex<double> lambda = std::polar(1.0, 2.0 * std::numbers::pi / desc_.h);
  Eigen::FullPivLU<Mat> lu(m - lambda * Mat::Identity(n, n));
  lu.setThreshold(1e-9);
  if (lu.dimensionOfKernel() == 0) return false;
  const Mat kernel = lu.kernel();
  // A generic combination of the eigenspace basis avoids every hyperplane
  // that does not contain the whole eigenspace.
  std::mt19937 rng(12345u);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
  for (Eigen::Index k = 0; k < kernel.cols(); ++k) {
    v += std::complex<double>(gauss(rng), gauss(rng)) * kernel.col(k);
  }
  const double tol = 1e-9 * v.norm();
  std::vector<std::complex<double>> coords(v.data(), v.data() + n);
  for (const auto& hp : hyperplanes_) {
    if (contains_point(hp, coords, tol)) return false;
  }
  return true;
}

std::vector<ElementId> ReflectionGroup::regular_elements() const {
  std::vector<ElementId> out;
  for (std::size_t id = 0; id < count_; ++id) {
    const auto eid = static_cast<ElementId>(id);
    if (order_of(eid) == desc_.h && is_regular(eid)) out.push_back(eid);
  }
  return out;
}

std::vector<ElementId> ReflectionGroup::conjugacy_class(ElementId a) const {
  std::set<ElementId> cls;
  for (std::size_t id = 0; id < count_; ++id) cls.insert(conjugate(a, static_cast<ElementId>(id)));
  return {cls.begin(), cls.end()};
}

}  // namespace crg
