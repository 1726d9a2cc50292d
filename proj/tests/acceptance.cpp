// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "crglab/hurwitz.hpp"
#include "crglab/ll.hpp"

using namespace crg;

namespace {

struct Ctx {
  ReflectionGroup g;
  AbsoluteOrder ao;
  FlatLattice lat;
  FactorizationEngine eng;
  explicit Ctx(int d, int r, int n) : g(ReflectionGroup::build(d, r, n)), ao(g), lat(g), eng(ao, lat, g.coxeter_element()) {}
};

struct Gid {
  int d, r, n;
};

const std::vector<Gid> kList{{1, 1, 3}, {1, 1, 4}, {1, 1, 5}, {1, 1, 6}, {2, 1, 2},
                             {2, 1, 3}, {2, 2, 4}, {3, 1, 2}, {3, 3, 3}, {5, 5, 2}};

std::map<std::tuple<int, int, int>, std::unique_ptr<Ctx>> g_cache;

Ctx& ctx(int d, int r, int n) {
  auto& slot = g_cache[{d, r, n}];
  if (!slot) slot = std::make_unique<Ctx>(d, r, n);
  return *slot;
}

std::string gname(const Gid& x) {
  return x.d == 1 ? "S" + std::to_string(x.n)
                  : "G(" + std::to_string(x.d) + "," + std::to_string(x.r) + "," + std::to_string(x.n) + ")";
}

// Degrees from the standard tables, kept apart from the library's own.
std::vector<std::int64_t> degrees(const Gid& x) {
  std::vector<std::int64_t> out;
  if (x.d == 1) {
    for (int i = 2; i <= x.n; ++i) out.push_back(i);
  } else if (x.r == 1) {
    for (int i = 1; i <= x.n; ++i) out.push_back(static_cast<std::int64_t>(i) * x.d);
  } else {
    for (int i = 1; i < x.n; ++i) out.push_back(static_cast<std::int64_t>(i) * x.d);
    out.push_back(x.n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t fact(int k) {
  std::int64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t out = 1;
  while (e-- > 0) out *= b;
  return out;
}

// Failure messages collected by a criterion body.
struct Log {
  std::vector<std::string> failures;
  std::string summary;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

template <class A, class B>
std::string neq(const std::string& what, const A& a, const B& b) {
  std::ostringstream os;
  os << what << ": " << a << " vs " << b;
  return os.str();
}

int run(int id, const std::string& title, double limit_s, const std::function<void(Log&)>& body) {
  Log log;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(log);
  } catch (const std::exception& e) {
    log.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_s) log.failures.push_back(neq("time limit exceeded (s)", secs, limit_s));
  const bool ok = log.failures.empty();
  std::printf("%s criterion %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              log.summary.empty() ? "" : " ", log.summary.c_str());
  for (std::size_t i = 0; i < log.failures.size() && i < 10; ++i) std::printf("    %s\n", log.failures[i].c_str());
  std::fflush(stdout);
  return ok ? 0 : 1;
}

// Monic integer polynomial split over Z: integer roots with multiplicity,
// searched among divisors of the lowest nonzero coefficient.
bool splits_over_z(IntPoly p) {
  int found = 0;
  const int deg = p.degree();
  while (p.degree() > 0) {
    int low = 0;
    while (p.coeff(low) == 0) ++low;
    if (low > 0) {
      std::vector<std::int64_t> c(p.coeffs().begin() + low, p.coeffs().end());
      found += low;
      p = IntPoly(c);
      continue;
    }
    const std::int64_t c0 = std::llabs(p.coeff(0));
    bool hit = false;
    for (std::int64_t q = 1; q <= c0 && !hit; ++q) {
      if (c0 % q) continue;
      for (std::int64_t root : {q, -q}) {
        IntPoly out;
        if (p.eval(root) == 0 && p.divide_exact(IntPoly({-root, 1}), out)) {
          p = out;
          ++found;
          hit = true;
          break;
        }
      }
    }
    if (!hit) return false;
  }
  return found == deg;
}

}  // namespace

int main() {
  int failures = 0;

  failures += run(1, "reduced factorization counts", 60.0, [](Log& log) {
    const std::map<std::string, std::uint64_t> expected{{"S3", 3},       {"S4", 16},      {"S5", 125},
                                                        {"S6", 1296},    {"G(2,1,2)", 4}, {"G(2,1,3)", 27},
                                                        {"G(2,2,4)", 162}, {"G(3,1,2)", 4}, {"G(3,3,3)", 24},
                                                        {"G(5,5,2)", 5}};
    for (const auto& x : kList) {
      auto& c = ctx(x.d, x.r, x.n);
      const auto degs = degrees(x);
      const std::int64_t h = degs.back();
      const std::int64_t formula = ipow(h, x.n - (x.d == 1 ? 1 : 0)) * fact(c.g.rank()) / static_cast<std::int64_t>(c.g.size());
      const auto red = c.eng.enumerate_red();
      for (const auto& t : red) c.eng.check_factorization(t);
      log.expect(red.size() == static_cast<std::uint64_t>(formula), neq(gname(x) + " |Red| vs formula", red.size(), formula));
      log.expect(red.size() == expected.at(gname(x)), neq(gname(x) + " |Red| vs table", red.size(), expected.at(gname(x))));
    }
  });

  failures += run(2, "noncrossing interval sizes", 30.0, [](Log& log) {
    const std::map<std::string, std::uint64_t> expected{{"S4", 14}, {"G(2,1,3)", 20}, {"G(2,2,4)", 50}};
    for (const auto& x : kList) {
      auto& c = ctx(x.d, x.r, x.n);
      const auto degs = degrees(x);
      std::int64_t num = 1;
      for (auto di : degs) num *= degs.back() + di;
      const auto w = static_cast<std::int64_t>(c.g.size());
      log.expect(num % w == 0, gname(x) + " formula not integral");
      // Brute force: every u with l(u) + l(u^{-1} c) = l(c).
      std::uint64_t brute = 0;
      const ElementId cx = c.eng.coxeter();
      for (ElementId u = 0; u < c.g.size(); ++u) {
        brute += c.ao.length(u) + c.ao.length(c.g.mul(c.g.inverse(u), cx)) == c.ao.length(cx) ? 1 : 0;
      }
      log.expect(c.eng.nc().size() == static_cast<std::uint64_t>(num / w), neq(gname(x) + " |NC| vs formula", c.eng.nc().size(), num / w));
      log.expect(brute == c.eng.nc().size(), neq(gname(x) + " |NC| vs scan", brute, c.eng.nc().size()));
      if (expected.count(gname(x))) log.expect(brute == expected.at(gname(x)), neq(gname(x) + " |NC| vs table", brute, expected.at(gname(x))));
    }
  });

  failures += run(3, "primitive factorization counts per flat orbit", 120.0, [](Log& log) {
    int checked = 0;
    for (const auto& x : std::vector<Gid>{{1, 1, 4}, {1, 1, 5}, {2, 1, 3}, {2, 2, 4}, {3, 1, 2}, {3, 3, 3}}) {
      auto& c = ctx(x.d, x.r, x.n);
      const std::int64_t h = degrees(x).back();
      for (const auto& o : c.lat.orbits()) {
        // Brute force over factorizations of shape (codim, 1, ..., 1).
        std::uint64_t brute = 0;
        if (o.codim == 0) {
          brute = c.eng.enumerate_red().size();
        } else {
          std::vector<int> comp{o.codim};
          comp.resize(static_cast<std::size_t>(o.dim) + 1, 1);
          for (const auto& t : c.eng.enumerate_block(comp)) brute += c.lat.orbit_of_element(t.front()) == o.id ? 1 : 0;
        }
        const std::int64_t num = ipow(h, o.dim) * fact(o.dim);
        const auto idx = static_cast<std::int64_t>(o.index);
        log.expect(num % idx == 0 && brute == static_cast<std::uint64_t>(num / idx),
                   neq(gname(x) + " " + o.name + " count vs formula", brute, std::to_string(num) + "/" + std::to_string(idx)));
        log.expect(c.eng.primitive_count(o.id).count == brute, gname(x) + " " + o.name + " engine disagrees with brute force");
        ++checked;
      }
    }
    log.summary = std::to_string(checked) + " orbits";
  });

  failures += run(4, "Kreweras numbers and integral characteristic roots", 60.0, [](Log& log) {
    for (const auto& x : std::vector<Gid>{{1, 1, 4}, {1, 1, 5}, {2, 1, 3}, {2, 2, 4}}) {
      auto& c = ctx(x.d, x.r, x.n);
      const std::int64_t h = degrees(x).back();
      std::map<int, std::int64_t> krew;
      for (ElementId u : c.eng.nc()) ++krew[c.lat.orbit_of_element(u)];
      for (const auto& o : c.lat.orbits()) {
        const std::int64_t chi = o.char_poly.eval(h + 1);
        log.expect(krew[o.id] * static_cast<std::int64_t>(o.index) == chi,
                   neq(gname(x) + " " + o.name + " Krew*index vs chi(h+1)", krew[o.id] * static_cast<std::int64_t>(o.index), chi));
        log.expect(splits_over_z(o.char_poly), gname(x) + " " + o.name + " chi has non-integer roots: " + o.char_poly.to_string());
      }
    }
  });

  failures += run(5, "characteristic polynomial sum identity", 60.0, [](Log& log) {
    for (const auto& x : kList) {
      auto& c = ctx(x.d, x.r, x.n);
      // Sum over flats Z of chi(A^Z, t) times |W_Z|, grouped by orbits:
      // orbit size * |W_Z| = |W| / index.
      IntPoly lhs;
      for (const auto& o : c.lat.orbits()) {
        log.expect(o.size() * o.pointwise_order * o.index == c.g.size(), gname(x) + " " + o.name + " orbit-stabilizer");
        lhs += o.char_poly * static_cast<std::int64_t>(o.size() * o.pointwise_order);
      }
      IntPoly rhs = IntPoly::constant(1);
      for (auto di : degrees(x)) rhs = rhs * IntPoly({di - 1, 1});
      log.expect(lhs == rhs, gname(x) + ": " + lhs.to_string() + " vs " + rhs.to_string());
    }
  });

  failures += run(6, "Hurwitz transitivity", 120.0, [](Log& log) {
    for (const auto& x : std::vector<Gid>{{1, 1, 4}, {2, 1, 3}, {2, 2, 4}}) {
      auto& c = ctx(x.d, x.r, x.n);
      const auto red = c.eng.enumerate_red();
      const auto orbit = hurwitz_orbit(c.g, red.front());
      log.expect(orbit == red, neq(gname(x) + " Red orbit vs |Red|", orbit.size(), red.size()));
    }
    for (const auto& x : std::vector<Gid>{{1, 1, 4}, {2, 1, 3}}) {
      auto& c = ctx(x.d, x.r, x.n);
      for (const auto& o : c.lat.orbits()) {
        const auto po = primitive_orbit(c.eng, o.id);
        const std::int64_t formula = ipow(degrees(x).back(), o.dim) * fact(o.dim) / static_cast<std::int64_t>(o.index);
        log.expect(po.primitive_members == static_cast<std::uint64_t>(formula),
                   neq(gname(x) + " " + o.name + " primitive members in one orbit vs count", po.primitive_members, formula));
      }
    }
  });

  failures += run(7, "passports", 120.0, [](Log& log) {
    int passports = 0;
    for (const auto& x : std::vector<Gid>{{1, 1, 4}, {1, 1, 5}}) {
      auto& c = ctx(x.d, x.r, x.n);
      const std::int64_t h = x.n;
      // Ordered passports from all block factorizations.
      std::map<std::vector<int>, std::int64_t> ordered;
      for (const auto& comp : compositions(c.g.rank())) {
        for (const auto& t : c.eng.enumerate_block(comp)) ++ordered[c.eng.ordered_passport(t)];
      }
      std::map<std::vector<int>, std::vector<std::vector<int>>> classes;
      for (const auto& [p, k] : ordered) {
        auto key = p;
        std::sort(key.begin(), key.end());
        classes[key];
      }
      const auto multiplicity_factorials = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        std::int64_t out = 1;
        for (std::size_t i = 0; i < v.size();) {
          std::size_t j = i;
          while (j < v.size() && v[j] == v[i]) ++j;
          out *= fact(static_cast<int>(j - i));
          i = j;
        }
        return out;
      };
      for (const auto& [key, unused] : classes) {
        ++passports;
        std::set<std::int64_t> counts;
        auto perm = key;
        do {
          counts.insert(ordered.count(perm) ? ordered.at(perm) : 0);
        } while (std::next_permutation(perm.begin(), perm.end()));
        log.expect(counts.size() == 1, gname(x) + " ordering-dependent counts");

        std::vector<int> codims;
        for (int o : key) codims.push_back(c.lat.orbits()[static_cast<std::size_t>(o)].codim);
        const Rational aut(multiplicity_factorials(codims), multiplicity_factorials(key));
        Rational closed = aut * ipow(h, static_cast<int>(key.size()) - 1);
        for (int o : key) {
          const auto& orb = c.lat.orbits()[static_cast<std::size_t>(o)];
          closed *= Rational(fact(orb.dim), static_cast<std::int64_t>(orb.index));
        }
        // Stratum count: orderings whose codimension sequence is `codims`.
        std::int64_t stratum = 0;
        perm = key;
        do {
          std::vector<int> pc;
          for (int o : perm) pc.push_back(c.lat.orbits()[static_cast<std::size_t>(o)].codim);
          if (pc == codims && ordered.count(perm)) stratum += ordered.at(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        log.expect(closed == Rational(stratum), neq(gname(x) + " closed form vs stratum", closed, stratum));
        log.expect(closed == aut * *counts.begin(), neq(gname(x) + " closed form vs aut * ordered", closed, aut * *counts.begin()));
      }
      for (const auto& e : c.eng.passport_census()) {
        log.expect(e.invariant && e.closed_form_matches(), gname(x) + " engine passport census disagrees");
      }
    }
    auto& s6 = ctx(1, 1, 6);
    int a1 = -1, a2 = -1, a111 = -1;
    for (const auto& o : s6.lat.orbits()) {
      if (o.name == "A1") a1 = o.id;
      if (o.name == "A2") a2 = o.id;
      if (o.name == "A1^3") a111 = o.id;
    }
    const auto four = s6.eng.passport_class(std::vector<int>{a1, a1, a1, a2});
    const auto two = s6.eng.passport_class(std::vector<int>{a111, a2});
    log.expect(!four.empty(), "S6 passport {A1,A1,A1,A2} unrealized");
    log.expect(!two.empty(), "S6 passport {A1^3,A2} unrealized");
    log.summary = std::to_string(passports) + " passports; S6 {A1,A1,A1,A2}: " + std::to_string(four.size()) +
                  ", {A1^3,A2}: " + std::to_string(two.size());
  });

  failures += run(8, "numerology h * rank = N + N*", 30.0, [](Log& log) {
    for (const auto& x : kList) {
      auto& c = ctx(x.d, x.r, x.n);
      std::set<Flat> hyperplanes;
      std::int64_t reflections = 0;
      for (ElementId w = 0; w < c.g.size(); ++w) {
        if (c.g.fixed_space_dim(w) == c.g.rank() - 1) {
          ++reflections;
          hyperplanes.insert(c.g.fixed_flat(w));
        }
      }
      const std::int64_t lhs = degrees(x).back() * c.g.rank();
      const auto rhs = static_cast<std::int64_t>(hyperplanes.size()) + reflections;
      log.expect(lhs == rhs, neq(gname(x) + " h*rank vs N+N*", lhs, rhs));
    }
  });

  failures += run(9, "Lyashko-Looijenga monodromy lab", 300.0, [](Log& log) {
    using namespace crg::ll;
    for (int m : {3, 4}) {
      const auto fiber = explore_fiber(random_generic(m, 2024));
      const std::size_t expected = m == 3 ? 3 : 16;
      log.expect(fiber.members.size() == expected, neq("degree " + std::to_string(m) + " fiber size", fiber.members.size(), expected));
      log.expect(fiber.injective, "degree " + std::to_string(m) + " labels not injective");
      auto& c = ctx(1, 1, m);
      FactorizationEngine eng(c.ao, c.lat, c.g.id_of(to_element(coxeter_loop(m))));
      std::set<std::vector<Perm>> red;
      for (const auto& t : eng.enumerate_red()) {
        std::vector<Perm> l;
        for (ElementId w : t) l.push_back(from_element(c.g.element(w)));
        red.insert(l);
      }
      std::set<std::vector<Perm>> seen;
      for (const auto& mbr : fiber.members) seen.insert(mbr.labels);
      log.expect(seen == red, "degree " + std::to_string(m) + " labels differ from Red");
    }

    std::mt19937_64 rng(7);
    int equi = 0;
    for (int m : {3, 4}) {
      for (std::uint64_t s = 0; s < 20; ++s) {
        const auto p = random_generic(m, 1000 + s);
        const auto i = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(m - 2));
        const auto before = rlbl(p).labels;
        const auto after = rlbl(lift_swap(p, i, true)).labels;
        log.expect(after == hurwitz_forward(before, i), "equivariance fails for " + p.to_string());
        ++equi;
      }
    }

    double worst = 0.0;
    for (std::uint64_t s = 0; s < 50; ++s) {
      const int m = 3 + static_cast<int>(s % 3);
      const auto p = random_generic(m, 5000 + s);
      const auto data = generic_data(p);
      const auto jac = value_jacobian(p, data.points);
      const double h = 1e-6;
      for (int k = 2; k <= m; ++k) {
        auto plus = p;
        auto minus = p;
        plus.coeffs[static_cast<std::size_t>(k - 2)] += h;
        minus.coeffs[static_cast<std::size_t>(k - 2)] -= h;
        // Critical values near the base points, by Newton on p' from each point.
        const auto values = [&](const CenteredPolynomial& q) {
          std::vector<cplx> v;
          for (cplx z : data.points) {
            for (int it = 0; it < 50; ++it) z -= q.derivative(z) / q.second_derivative(z);
            v.push_back(q.eval(z));
          }
          return v;
        };
        const auto vp = values(plus);
        const auto vm = values(minus);
        for (std::size_t r = 0; r < vp.size(); ++r) {
          const cplx fd = (vp[r] - vm[r]) / (2.0 * h);
          const cplx an = jac[r][static_cast<std::size_t>(k - 2)];
          worst = std::max(worst, std::abs(fd - an) / std::max(1.0, std::abs(an)));
        }
      }
    }
    log.expect(worst < 1e-5, neq("Jacobian relative error", worst, 1e-5));

    const std::vector<CenteredPolynomial> degenerate{
        CenteredPolynomial(4, {-2.0, 0.0, 0.0}), CenteredPolynomial(3, {0.0, 0.0}), CenteredPolynomial(4, {0.0, 0.0, 0.0}),
        CenteredPolynomial(5, {-2.0, 0.0, 1.0, 0.0}), CenteredPolynomial(5, {0.0, 0.0, 0.0, 0.0}),
        CenteredPolynomial(4, {0.0, 0.0, 1.0})};
    for (const auto& p : degenerate) {
      const auto l = rlbl(p);
      Perm prod = perm_identity(p.degree);
      for (std::size_t j = 0; j < l.labels.size(); ++j) {
        prod = perm_mul(prod, l.labels[j]);
        log.expect(l.config[j].multiplicity == perm_length(l.labels[j]),
                   neq(p.to_string() + " multiplicity vs length", l.config[j].multiplicity, perm_length(l.labels[j])));
      }
      log.expect(prod == coxeter_loop(p.degree), p.to_string() + " labels do not multiply to the Coxeter loop");
    }
    std::ostringstream os;
    os << equi << " equivariance samples, Jacobian max rel err " << std::scientific << std::setprecision(2) << worst;
    log.summary = os.str();
  });

  failures += run(10, "q-analog at q = 1", 60.0, [](Log& log) {
    int checked = 0;
    for (const auto& x : std::vector<Gid>{{1, 1, 4}, {2, 1, 3}}) {
      auto& c = ctx(x.d, x.r, x.n);
      for (const auto& o : c.lat.orbits()) {
        const auto cz = c.lat.cz_report(o.representative);
        if (!cz.is_reflection_group) continue;
        log.expect(cz.q_polynomial.has_value(), gname(x) + " " + o.name + ": reflection-generated but no q-analog");
        if (!cz.q_polynomial) continue;
        const std::int64_t formula = ipow(degrees(x).back(), o.dim) * fact(o.dim) / static_cast<std::int64_t>(o.index);
        log.expect(cz.q_polynomial->eval(1) == formula, neq(gname(x) + " " + o.name + " q(1) vs count", cz.q_polynomial->eval(1), formula));
        log.expect(c.eng.primitive_count(o.id).count == static_cast<std::uint64_t>(formula), gname(x) + " " + o.name + " count");
        ++checked;
      }
    }
    log.summary = std::to_string(checked) + " orbits";
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
