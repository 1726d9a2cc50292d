#include "crglab/ll.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace crg::ll {

namespace {

constexpr double kPi = std::numbers::pi;

struct HornerResult {
  cplx value;
  cplx derivative;
};

// coeffs highest degree first
HornerResult horner(const std::vector<cplx>& coeffs, cplx z) {
  cplx p = coeffs.front();
  cplx dp = 0.0;
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    dp = dp * z + p;
    p = p * z + coeffs[k];
  }
  return {p, dp};
}

double min_pairwise(const std::vector<cplx>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, std::abs(pts[i] - pts[j]));
  }
  return best;
}

// Index of the point in `ref` closest to z, with a uniqueness check.
std::size_t match(const std::vector<cplx>& ref, cplx z, double tol) {
  std::size_t best = 0;
  double dist = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < ref.size(); ++j) {
    const double dj = std::abs(ref[j] - z);
    if (dj < dist) {
      dist = dj;
      best = j;
    }
  }
  if (dist > tol) throw NumericError("tracked root does not return to the fiber");
  return best;
}

Perm permutation_from_tracking(const std::vector<cplx>& start, const std::vector<cplx>& end) {
  const double tol = 1e-6 * (1.0 + std::abs(*std::max_element(start.begin(), start.end(),
                                                            [](cplx a, cplx b) { return std::abs(a) < std::abs(b); })));
  Perm sigma(start.size());
  std::vector<char> hit(start.size(), 0);
  for (std::size_t i = 0; i < end.size(); ++i) {
    const auto j = match(start, end[i], tol);
    if (hit[j]) throw NumericError("root tracking merged two roots");
    hit[j] = 1;
    sigma[i] = static_cast<int>(j);
  }
  return sigma;
}

// A path t(s), s in [0, 1], in the base of the fibration p(z) - t.
using BasePath = std::function<cplx(double)>;

BasePath segment(cplx a, cplx b) {
  return [a, b](double s) { return a + s * (b - a); };
}

BasePath circle(cplx center, double radius, double start_angle) {
  return [=](double s) { return center + std::polar(radius, start_angle + 2.0 * kPi * s); };
}

std::vector<cplx> track_fiber(const CenteredPolynomial& p, const BasePath& path, std::vector<cplx> roots,
                              const Tolerances& tol) {
  return track_roots(
      [&](double s, std::vector<cplx>& out) { out = p.shifted(path(s)); }, std::move(roots), tol);
}

std::vector<cplx> roots_of_unity_lex(int m) {
  std::vector<cplx> r;
  for (int k = 0; k < m; ++k) r.push_back(std::polar(1.0, 2.0 * kPi * k / m));
  std::sort(r.begin(), r.end(), [](cplx a, cplx b) { return lex_less(a, b); });
  return r;
}

Eigen::MatrixXcd jacobian_matrix(const CenteredPolynomial& p, const std::vector<cplx>& points) {
  const auto rows = value_jacobian(p, points);
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXcd j(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) j(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  return j;
}

// Newton on p' from each previous critical point.
bool refine_points(const CenteredPolynomial& p, std::vector<cplx>& z) {
  for (auto& x : z) {
    bool done = false;
    for (int it = 0; it < 30 && !done; ++it) {
      const cplx d2 = p.second_derivative(x);
      if (std::abs(d2) == 0.0) return false;
      const cplx dx = p.derivative(x) / d2;
      x -= dx;
      done = std::abs(dx) <= 1e-14 * (1.0 + std::abs(x));
    }
    if (!done) return false;
  }
  return true;
}

}  // namespace

CenteredPolynomial::CenteredPolynomial(int m, std::vector<cplx> a) : degree(m), coeffs(std::move(a)) {
  if (m < 2) throw std::invalid_argument("centered polynomial needs degree >= 2");
  if (static_cast<int>(coeffs.size()) != m - 1) throw std::invalid_argument("centered polynomial needs m - 1 coefficients");
}

cplx CenteredPolynomial::eval(cplx z) const { return horner(shifted(0.0), z).value; }

cplx CenteredPolynomial::derivative(cplx z) const { return horner(shifted(0.0), z).derivative; }

cplx CenteredPolynomial::second_derivative(cplx z) const {
  const auto c = shifted(0.0);
  cplx p = c.front();
  cplx dp = 0.0;
  cplx ddp = 0.0;
  for (std::size_t k = 1; k < c.size(); ++k) {
    ddp = ddp * z + 2.0 * dp;
    dp = dp * z + p;
    p = p * z + c[k];
  }
  return ddp;
}

double CenteredPolynomial::scale() const {
  double s = 0.0;
  for (int k = 2; k <= degree; ++k) s = std::max(s, std::pow(std::abs(a(k)), 1.0 / k));
  return 1.0 + s;
}

std::vector<cplx> CenteredPolynomial::shifted(cplx t) const {
  std::vector<cplx> out(static_cast<std::size_t>(degree + 1), 0.0);
  out[0] = 1.0;
  for (int k = 2; k <= degree; ++k) out[static_cast<std::size_t>(k)] = a(k);
  out.back() -= t;
  return out;
}

std::string CenteredPolynomial::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << "z^" << degree;
  for (int k = 2; k <= degree; ++k) {
    const cplx c = a(k);
    if (c == 0.0) continue;
    os << " + (" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i) z^" << degree - k;
  }
  return os.str();
}

bool lex_less(cplx a, cplx b, double tie) {
  if (std::abs(a.real() - b.real()) > tie) return a.real() < b.real();
  return a.imag() < b.imag();
}

std::vector<cplx> critical_points(const CenteredPolynomial& p, const Tolerances& tol) {
  const int m = p.degree;
  const int n = m - 1;
  std::vector<cplx> out;
  if (n == 1) return {0.0};
  // Companion matrix of p'(z) / m = z^{n} + sum_{k=2}^{n} ((m - k) / m) a_k z^{n-k}.
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int k = 2; k <= n; ++k) comp(0, k - 1) = -static_cast<double>(m - k) / m * p.a(k);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  if (es.info() != Eigen::Success) throw NumericError("critical point eigen-solver did not converge");
  const double s = p.scale();
  const double bound = tol.residual * m * std::pow(s, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    cplx z = es.eigenvalues()(i);
    double res = std::abs(p.derivative(z));
    for (int it = 0; it < 50 && res > 0.0; ++it) {
      const cplx d2 = p.second_derivative(z);
      if (std::abs(d2) == 0.0) break;
      const cplx cand = z - p.derivative(z) / d2;
      const double cres = std::abs(p.derivative(cand));
      if (cres >= res) break;
      z = cand;
      res = cres;
    }
    if (res > bound) throw NumericError("critical point residual above tolerance");
    out.push_back(z);
  }
  return out;
}

Configuration critical_values(const CenteredPolynomial& p, const Tolerances& tol) {
  const auto pts = critical_points(p, tol);
  std::vector<cplx> vals;
  for (auto z : pts) vals.push_back(p.eval(z));
  const double radius = tol.cluster * p.scale();
  // single-linkage clustering
  std::vector<std::size_t> parent(vals.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < vals.size(); ++i) {
    for (std::size_t j = i + 1; j < vals.size(); ++j) {
      if (std::abs(vals[i] - vals[j]) <= radius) parent[find(i)] = find(j);
    }
  }
  std::vector<std::pair<cplx, int>> acc(vals.size(), {0.0, 0});
  for (std::size_t i = 0; i < vals.size(); ++i) {
    auto& slot = acc[find(i)];
    slot.first += vals[i];
    ++slot.second;
  }
  Configuration out;
  for (const auto& [sum, count] : acc) {
    if (count > 0) out.push_back({sum / static_cast<double>(count), count});
  }
  const double tie = 1e-9 * p.scale();
  std::sort(out.begin(), out.end(), [tie](const CriticalValue& a, const CriticalValue& b) { return lex_less(a.value, b.value, tie); });
  return out;
}

std::vector<cplx> track_roots(const std::function<void(double, std::vector<cplx>&)>& family, std::vector<cplx> start,
                              const Tolerances& tol) {
  const std::size_t m = start.size();
  std::vector<cplx> coeffs;
  std::vector<cplx> next(m);
  double s = 0.0;
  double h = tol.max_step;
  while (s < 1.0) {
    const double s1 = std::min(1.0, s + h);
    family(s1, coeffs);
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      double sep = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < m; ++j) {
        if (j != i) sep = std::min(sep, std::abs(start[i] - start[j]));
      }
      cplx z = start[i];
      bool converged = false;
      for (int it = 0; it < 40; ++it) {
        const auto hr = horner(coeffs, z);
        if (std::abs(hr.derivative) == 0.0) break;
        const cplx dz = hr.value / hr.derivative;
        z -= dz;
        if (std::abs(z - start[i]) >= 0.2 * sep) break;
        if (std::abs(dz) <= 1e-13 * (1.0 + std::abs(z))) {
          converged = true;
          break;
        }
      }
      ok = converged && std::abs(z - start[i]) < 0.2 * sep;
      next[i] = z;
    }
    if (ok) {
      start.swap(next);
      s = s1;
      h = std::min(2.0 * h, tol.max_step);
    } else {
      h *= 0.5;
      if (h < tol.min_step) throw NumericError("root tracking step underflow");
    }
  }
  return start;
}

Perm coxeter_loop(int m, const Tolerances& tol) {
  if (m < 2) throw std::invalid_argument("coxeter_loop needs m >= 2");
  const auto start = roots_of_unity_lex(m);
  const auto end = track_roots(
      [m](double s, std::vector<cplx>& out) {
        out.assign(static_cast<std::size_t>(m + 1), 0.0);
        out[0] = 1.0;
        out.back() = -std::polar(1.0, 2.0 * kPi * s);
      },
      start, tol);
  return perm_inverse(permutation_from_tracking(start, end));
}

LabelledConfiguration rlbl(const CenteredPolynomial& p, const Tolerances& tol) {
  const int m = p.degree;
  LabelledConfiguration out;
  out.config = critical_values(p, tol);
  const double scale = p.scale();
  std::vector<cplx> centers;
  for (const auto& cv : out.config) centers.push_back(cv.value);
  const std::size_t k = centers.size();
  if (k > 1 && min_pairwise(centers) <= 10.0 * tol.cluster * scale) {
    throw NumericError("critical value clusters are not well separated");
  }

  double max_abs = 0.0;
  double max_im = -std::numeric_limits<double>::infinity();
  double mean_re = 0.0;
  for (auto v : centers) {
    max_abs = std::max(max_abs, std::abs(v));
    max_im = std::max(max_im, v.imag());
    mean_re += v.real() / static_cast<double>(k);
  }
  double spread = scale;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) spread = std::max(spread, std::abs(centers[i] - centers[j]));
  }
  const double y0 = max_im + spread;
  const cplx base(mean_re, max_im + 2.0 * spread);
  out.basepoint = base;

  // Transport the reference labels: t from 1 to iH over z^m, then deform
  // z^m into p by scaling a_k by s^k (critical values scale by s^m, staying
  // inside |t| < H), then move t above all values to the basepoint.
  const double big = 1.0 + max_abs + scale;
  auto roots = roots_of_unity_lex(m);
  const auto zm = CenteredPolynomial::monomial(m);
  roots = track_fiber(zm, segment(1.0, cplx(0.0, big)), roots, tol);
  roots = track_roots(
      [&](double s, std::vector<cplx>& c) {
        c = p.shifted(cplx(0.0, big));
        for (int j = 2; j <= m; ++j) c[static_cast<std::size_t>(j)] *= std::pow(s, j);
        c.back() = std::pow(s, m) * p.a(m) - cplx(0.0, big);
      },
      roots, tol);
  const double top = std::max(big, base.imag());
  roots = track_fiber(p, segment(cplx(0.0, big), cplx(0.0, top)), roots, tol);
  roots = track_fiber(p, segment(cplx(0.0, top), cplx(base.real(), top)), roots, tol);
  roots = track_fiber(p, segment(cplx(base.real(), top), base), roots, tol);
  const std::vector<cplx> labelled = roots;

  // Tilt so that kappa = Re + eps Im strictly preserves the lex order.
  double eps = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const cplx a = centers[i];
      const cplx b = centers[j];
      if (b.real() > a.real() && a.imag() > b.imag()) {
        eps = std::min(eps, 0.5 * (b.real() - a.real()) / (a.imag() - b.imag()));
      }
    }
  }
  const cplx dir = cplx(-eps, 1.0) / std::abs(cplx(-eps, 1.0));
  const auto ray_distance = [&](cplx w, cplx origin) {
    const double tau = (std::conj(dir) * (w - origin)).real();
    return tau <= 0.0 ? std::abs(w - origin) : std::abs(w - origin - tau * dir);
  };
  double radius = k > 1 ? 0.1 * min_pairwise(centers) : 0.1 * scale;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j) radius = std::min(radius, 0.4 * ray_distance(centers[i], centers[j]));
    }
  }

  for (std::size_t j = 0; j < k; ++j) {
    const cplx v = centers[j];
    const cplx q = v + radius * dir;
    const cplx w = v + ((y0 - v.imag()) / dir.imag()) * dir;
    auto r = track_fiber(p, segment(base, w), labelled, tol);
    r = track_fiber(p, segment(w, q), r, tol);
    r = track_fiber(p, circle(v, radius, std::arg(dir)), r, tol);
    r = track_fiber(p, segment(q, w), r, tol);
    r = track_fiber(p, segment(w, base), r, tol);
    out.labels.push_back(perm_inverse(permutation_from_tracking(labelled, r)));
  }
  return out;
}

std::vector<std::vector<cplx>> value_jacobian(const CenteredPolynomial& p, const std::vector<cplx>& points) {
  const int m = p.degree;
  std::vector<std::vector<cplx>> out;
  for (auto z : points) {
    std::vector<cplx> row;
    for (int k = 2; k <= m; ++k) row.push_back(std::pow(z, m - k));
    out.push_back(std::move(row));
  }
  return out;
}

GenericData generic_data(const CenteredPolynomial& p, const Tolerances& tol) {
  const auto pts = critical_points(p, tol);
  std::vector<std::pair<cplx, cplx>> pairs;
  for (auto z : pts) pairs.emplace_back(p.eval(z), z);
  const double tie = 1e-9 * p.scale();
  std::sort(pairs.begin(), pairs.end(), [tie](const auto& a, const auto& b) { return lex_less(a.first, b.first, tie); });
  GenericData out;
  for (const auto& [v, z] : pairs) {
    out.values.push_back(v);
    out.points.push_back(z);
  }
  if (out.values.size() > 1 && min_pairwise(out.values) <= tol.cluster * p.scale()) {
    throw NumericError("critical values are not distinct");
  }
  return out;
}

CenteredPolynomial lift_path(const CenteredPolynomial& p0, const std::function<std::vector<cplx>(double)>& motion,
                             const Tolerances& tol) {
  auto data = generic_data(p0, tol);
  const double scale = p0.scale();
  const auto e0 = motion(0.0);
  if (e0.size() != data.values.size()) throw std::invalid_argument("lift_path: motion has the wrong number of values");
  for (std::size_t j = 0; j < e0.size(); ++j) {
    if (std::abs(e0[j] - data.values[j]) > 1e-6 * scale) throw std::invalid_argument("lift_path: motion does not start at LL(p0)");
  }
  CenteredPolynomial p = p0;
  std::vector<cplx> z = data.points;
  std::vector<cplx> current = data.values;
  const int n = p.degree - 1;
  const double corr_tol = 1e-11 * scale;

  const auto residual_of = [&](const CenteredPolynomial& q, const std::vector<cplx>& pts, const std::vector<cplx>& target) {
    Eigen::VectorXcd r(n);
    for (int j = 0; j < n; ++j) r(j) = q.eval(pts[static_cast<std::size_t>(j)]) - target[static_cast<std::size_t>(j)];
    return r;
  };
  const auto solve = [&](const CenteredPolynomial& q, const std::vector<cplx>& pts, const Eigen::VectorXcd& rhs) {
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(jacobian_matrix(q, pts));
    if (lu.rank() < n || lu.rcond() < 1e-13) throw NumericError("lift_path: singular Jacobian");
    return Eigen::VectorXcd(lu.solve(rhs));
  };
  const auto apply = [&](CenteredPolynomial q, const Eigen::VectorXcd& delta) {
    for (int j = 0; j < n; ++j) q.coeffs[static_cast<std::size_t>(j)] += delta(j);
    return q;
  };

  double tau = 0.0;
  double h = tol.max_step;
  while (tau < 1.0) {
    const double tau1 = std::min(1.0, tau + h);
    const auto target = motion(tau1);
    if (n > 1 && min_pairwise(target) < tol.regular_margin * scale) {
      throw NumericError("lift_path: motion leaves the regular part");
    }
    bool ok = false;
    CenteredPolynomial q = p;
    std::vector<cplx> pts = z;
    try {
      Eigen::VectorXcd de(n);
      for (int j = 0; j < n; ++j) de(j) = target[static_cast<std::size_t>(j)] - current[static_cast<std::size_t>(j)];
      q = apply(q, solve(q, pts, de));
      for (int it = 0; it < 8; ++it) {
        if (!refine_points(q, pts)) break;
        const auto r = residual_of(q, pts, target);
        if (r.cwiseAbs().maxCoeff() <= corr_tol) {
          ok = true;
          break;
        }
        q = apply(q, solve(q, pts, -r));
      }
    } catch (const NumericError&) {
      if (h * 0.5 < tol.min_step) throw;
      ok = false;
    }
    if (ok && n > 1) {
      double sep = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < z.size(); ++i) {
        for (std::size_t j = i + 1; j < z.size(); ++j) sep = std::min(sep, std::abs(z[i] - z[j]));
      }
      for (std::size_t i = 0; i < z.size() && ok; ++i) ok = std::abs(pts[i] - z[i]) < 0.2 * sep;
    }
    if (ok) {
      p = q;
      z = pts;
      current = target;
      tau = tau1;
      h = std::min(2.0 * h, tol.max_step);
    } else {
      h *= 0.5;
      if (h < tol.min_step) throw NumericError("lift_path: step underflow");
    }
  }
  // Final check against a fresh critical value computation.
  const auto check = generic_data(p, tol);
  auto want = current;
  std::sort(want.begin(), want.end(), [&](cplx a, cplx b) { return lex_less(a, b, 1e-9 * p.scale()); });
  for (std::size_t j = 0; j < want.size(); ++j) {
    if (std::abs(check.values[j] - want[j]) > tol.polish * scale) throw NumericError("lift_path: endpoint misses the target");
  }
  return p;
}

std::function<std::vector<cplx>(double)> swap_motion(const std::vector<cplx>& values, std::size_t i, bool ccw) {
  if (i + 1 >= values.size()) throw std::out_of_range("swap_motion: index out of range");
  const cplx mid = 0.5 * (values[i] + values[i + 1]);
  const cplx d = 0.5 * (values[i + 1] - values[i]);
  double eta = 1.0;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j == i || j == i + 1) continue;
    const cplx u = (values[j] - mid) / d;
    if (std::abs(u.real()) < 1.0) {
      const double limit = std::abs(u.imag()) / std::sqrt(1.0 - u.real() * u.real());
      eta = std::min(eta, 0.5 * limit);
    }
  }
  const double sign = ccw ? 1.0 : -1.0;
  return [values, i, mid, d, eta, sign](double tau) {
    const double theta = sign * kPi * tau;
    const cplx rot(std::cos(theta), eta * std::sin(theta));
    auto out = values;
    out[i] = mid - d * rot;
    out[i + 1] = mid + d * rot;
    return out;
  };
}

CenteredPolynomial lift_swap(const CenteredPolynomial& p, std::size_t i, bool ccw, const Tolerances& tol) {
  const auto data = generic_data(p, tol);
  return lift_path(p, swap_motion(data.values, i, ccw), tol);
}

FiberReport explore_fiber(const CenteredPolynomial& p0, const Tolerances& tol) {
  FiberReport out;
  const double scale = p0.scale();
  const auto distance = [](const CenteredPolynomial& a, const CenteredPolynomial& b) {
    double d = 0.0;
    for (std::size_t j = 0; j < a.coeffs.size(); ++j) d = std::max(d, std::abs(a.coeffs[j] - b.coeffs[j]));
    return d;
  };
  std::vector<CenteredPolynomial> members{p0};
  const std::size_t swaps = static_cast<std::size_t>(p0.degree - 2);
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (std::size_t i = 0; i < swaps; ++i) {
      for (bool ccw : {true, false}) {
        const auto q = lift_swap(members[head], i, ccw, tol);
        ++out.lifts;
        bool known = false;
        for (const auto& mbr : members) {
          const double dist = distance(q, mbr) / scale;
          if (dist < tol.dedup) {
            known = true;
            break;
          }
          if (dist < 10.0 * tol.dedup) {
            throw NumericError("explore_fiber: ambiguous deduplication at relative distance " + std::to_string(dist));
          }
        }
        if (!known) members.push_back(q);
      }
    }
  }
  std::set<std::vector<Perm>> seen;
  for (const auto& mbr : members) {
    auto labels = rlbl(mbr, tol).labels;
    seen.insert(labels);
    out.members.push_back({mbr, std::move(labels)});
  }
  out.injective = seen.size() == out.members.size();
  return out;
}

std::vector<Perm> hurwitz_forward(const std::vector<Perm>& t, std::size_t i) {
  if (i + 1 >= t.size()) throw std::out_of_range("hurwitz_forward: index out of range");
  auto out = t;
  out[i] = t[i + 1];
  out[i + 1] = perm_mul(perm_inverse(t[i + 1]), perm_mul(t[i], t[i + 1]));
  return out;
}

bool equivariance_check(const CenteredPolynomial& p, std::size_t i, const Tolerances& tol) {
  const auto before = rlbl(p, tol).labels;
  const auto after = rlbl(lift_swap(p, i, true, tol), tol).labels;
  return after == hurwitz_forward(before, i);
}

CenteredPolynomial random_generic(int m, std::uint64_t seed, double min_gap) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<cplx> a;
    for (int k = 2; k <= m; ++k) a.emplace_back(gauss(rng), gauss(rng));
    CenteredPolynomial p(m, a);
    std::vector<cplx> vals;
    for (const auto& cv : critical_values(p)) {
      if (cv.multiplicity != 1) vals.clear();
      vals.push_back(cv.value);
    }
    if (static_cast<int>(vals.size()) != m - 1) continue;
    if (m > 2 && min_pairwise(vals) < min_gap * p.scale()) continue;
    return p;
  }
  throw NumericError("random_generic: no generic sample found");
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

Perm perm_inverse(const Perm& a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return out;
}

Perm perm_identity(int m) {
  Perm out(static_cast<std::size_t>(m));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

int perm_cycles(const Perm& a) {
  std::vector<char> seen(a.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(a[j])) seen[j] = 1;
  }
  return cycles;
}

std::string perm_to_string(const Perm& a) {
  std::ostringstream os;
  std::vector<char> seen(a.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i] || a[i] == static_cast<int>(i)) continue;
    any = true;
    os << "(";
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(a[j])) {
      seen[j] = 1;
      os << (j == i ? "" : " ") << j + 1;
    }
    os << ")";
  }
  return any ? os.str() : "()";
}

GroupElement to_element(const Perm& a) {
  GroupElement w = GroupElement::identity(1, static_cast<int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) w.perm[i] = static_cast<std::uint8_t>(a[i]);
  return w;
}

Perm from_element(const GroupElement& w) {
  Perm out(w.perm.size());
  for (std::size_t i = 0; i < w.perm.size(); ++i) out[i] = w.perm[i];
  return out;
}

}  // namespace crg::ll
