#include "crglab/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include "crglab/hurwitz.hpp"

namespace crg::report {

namespace {

std::int64_t factorial(int k) {
  std::int64_t f = 1;
  for (int i = 2; i <= k; ++i) f = checked::mul(f, i);
  return f;
}

std::int64_t power(std::int64_t b, int e) {
  std::int64_t out = 1;
  for (int i = 0; i < e; ++i) out = checked::mul(out, b);
  return out;
}

json cplx_json(ll::cplx z) { return json::array({z.real(), z.imag()}); }

json poly_json(const ll::CenteredPolynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs) a.push_back(cplx_json(c));
  return {{"degree", p.degree}, {"coeffs", std::move(a)}};
}

json labels_json(const std::vector<ll::Perm>& labels) {
  json out = json::array();
  for (const auto& l : labels) out.push_back(ll::perm_to_string(l));
  return out;
}

std::string passport_name(const FlatLattice& lat, const std::vector<int>& passport) {
  std::string out;
  for (std::size_t i = 0; i < passport.size(); ++i) {
    out += (i ? "," : "") + lat.orbits()[static_cast<std::size_t>(passport[i])].name + "#" + std::to_string(passport[i]);
  }
  return out;
}

std::string orbit_subject(const FlatOrbit& o) { return o.name + "#" + std::to_string(o.id); }

json passports_section(const GroupContext& ctx, json& verdicts, bool with_hurwitz) {
  const auto& lat = *ctx.lattice;
  json out = json::array();
  for (const auto& e : ctx.engine->passport_census()) {
    const std::string subject = passport_name(lat, e.passport);
    json orderings = json::array();
    std::uint64_t lo = e.orderings.front().count;
    std::uint64_t hi = lo;
    for (const auto& oc : e.orderings) {
      orderings.push_back({{"passport", oc.passport}, {"count", oc.count}});
      lo = std::min(lo, oc.count);
      hi = std::max(hi, oc.count);
    }
    json entry = {{"passport", e.passport},
                  {"names", subject},
                  {"codims", e.codims},
                  {"total", e.total},
                  {"orderings", std::move(orderings)}};
    verdicts.push_back(verdict("ordering_invariance", subject, lo, hi));
    if (e.closed_form) {
      entry["closed_form"] = rational(*e.closed_form);
      entry["aut_times_ordered"] = rational(*e.aut_times_ordered);
      entry["stratum_count"] = rational(*e.stratum_count);
      verdicts.push_back(verdict("local_degree_vs_ordered", subject, rational(*e.closed_form), rational(*e.aut_times_ordered)));
      verdicts.push_back(verdict("local_degree_vs_stratum", subject, rational(*e.closed_form), rational(*e.stratum_count)));
    }
    if (with_hurwitz) {
      const auto census = orbit_census(*ctx.engine, e.passport);
      entry["hurwitz_orbits"] = census.orbit_sizes;
      entry["class_size"] = census.class_size;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

json verdict(const std::string& identity, const std::string& subject, json lhs, json rhs, bool asserted) {
  const bool pass = lhs == rhs;
  return {{"identity", identity}, {"subject", subject}, {"lhs", std::move(lhs)},
          {"rhs", std::move(rhs)},  {"pass", pass},       {"asserted", asserted}};
}

json rational(const Rational& x) {
  if (x.denominator() == 1) return x.numerator();
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

json descriptor(const ReflectionGroup& g) {
  const auto& dsc = g.descriptor();
  return {{"d", dsc.d},
          {"r", dsc.r},
          {"n", dsc.n},
          {"name", dsc.name()},
          {"rank", dsc.rank},
          {"order", dsc.order},
          {"degrees", dsc.degrees},
          {"coxeter_number", dsc.h},
          {"hyperplanes", dsc.num_hyperplanes},
          {"reflections", dsc.num_reflections}};
}

json group_info(const ReflectionGroup& g) {
  const auto& dsc = g.descriptor();
  json verdicts = json::array();
  verdicts.push_back(verdict("numerology", dsc.name(), dsc.h * dsc.rank, dsc.num_hyperplanes + dsc.num_reflections));
  std::int64_t prod = 1;
  std::int64_t exps = 0;
  for (int x : dsc.degrees) {
    prod = checked::mul(prod, x);
    exps += x - 1;
  }
  verdicts.push_back(verdict("degree_product", dsc.name(), prod, dsc.order));
  verdicts.push_back(verdict("exponent_sum", dsc.name(), exps, dsc.num_reflections));
  return {{"schema_version", kSchemaVersion},
          {"command", "group info"},
          {"descriptor", descriptor(g)},
          {"h_times_rank", dsc.h * dsc.rank},
          {"verdicts", std::move(verdicts)}};
}

json group_verify(const GroupContext& ctx) {
  const auto& g = ctx.group;
  const auto& dsc = g.descriptor();
  const auto& lat = *ctx.lattice;
  const auto& eng = *ctx.engine;
  json report = group_info(g);
  report["command"] = "group verify";
  json& verdicts = report["verdicts"];

  const auto red = eng.enumerate_red();
  const auto w = static_cast<std::int64_t>(g.size());
  report["red_count"] = red.size();
  verdicts.push_back(verdict("reduced_count", dsc.name(), red.size(),
                             rational(Rational(checked::mul(power(dsc.h, dsc.rank), factorial(dsc.rank)), w))));
  Rational nc_formula(1);
  for (int x : dsc.degrees) nc_formula *= dsc.h + x;
  nc_formula /= w;
  report["nc_size"] = eng.nc().size();
  verdicts.push_back(verdict("noncrossing_count", dsc.name(), eng.nc().size(), rational(nc_formula)));

  const auto red_orbit = hurwitz_orbit(g, red.front());
  report["hurwitz_red_orbit"] = red_orbit.size();
  verdicts.push_back(verdict("hurwitz_transitive_on_red", dsc.name(), red_orbit.size(), red.size()));

  const auto krew = eng.kreweras();
  IntPoly sum;
  json orbits = json::array();
  for (const auto& o : lat.orbits()) {
    const std::string subject = orbit_subject(o);
    const auto& k = krew[static_cast<std::size_t>(o.id)];
    const auto pc = eng.primitive_count(o.id);
    const auto po = primitive_orbit(eng, o.id);
    const auto cz = lat.cz_report(o.representative);
    sum += o.char_poly * static_cast<std::int64_t>(g.size() / o.index);

    json row = {{"id", o.id},
                {"name", o.name},
                {"tag", o.tag},
                {"dim", o.dim},
                {"codim", o.codim},
                {"size", o.size()},
                {"pointwise_order", o.pointwise_order},
                {"setwise_order", o.setwise_order},
                {"index", o.index},
                {"char_poly", o.char_poly.coeffs()},
                {"chi_at_h_plus_1", k.chi_at_h_plus_1},
                {"kreweras", k.count},
                {"primitive_count", pc.count},
                {"primitive_formula", rational(Rational(static_cast<std::int64_t>(pc.formula_numerator),
                                                        static_cast<std::int64_t>(pc.index)))},
                {"primitive_per_flat", pc.per_flat},
                {"hurwitz_orbit_size", po.orbit_size},
                {"hurwitz_primitive_members", po.primitive_members}};
    row["os_exponents"] = o.os_exponents ? json(*o.os_exponents) : json(nullptr);
    json czj = {{"order", cz.order}, {"reflections_on_z", cz.reflections_on_z}, {"reflection_generated", cz.is_reflection_group}};
    czj["degrees"] = cz.degrees ? json(*cz.degrees) : json(nullptr);
    czj["q_polynomial"] = cz.q_polynomial ? json(cz.q_polynomial->coeffs()) : json(nullptr);
    if (!cz.note.empty()) czj["note"] = cz.note;
    row["cz"] = std::move(czj);
    orbits.push_back(std::move(row));

    verdicts.push_back(verdict("primitive_count", subject, pc.count,
                               rational(Rational(static_cast<std::int64_t>(pc.formula_numerator),
                                                 static_cast<std::int64_t>(pc.index)))));
    verdicts.push_back(verdict("kreweras", subject, rational(Rational(static_cast<std::int64_t>(k.count))),
                               rational(Rational(k.chi_at_h_plus_1, static_cast<std::int64_t>(k.index))), k.asserted));
    if (g.d() <= 2) {
      verdicts.push_back(verdict("chi_integer_roots", subject, o.os_exponents ? static_cast<int>(o.os_exponents->size()) : -1,
                                 o.dim));
    }
    verdicts.push_back(verdict("hurwitz_transitive_on_primitive", subject, po.primitive_members, pc.count));
    if (cz.q_polynomial) {
      verdicts.push_back(verdict("q_analog_at_one", subject, cz.q_polynomial->eval(1), pc.count));
    }
  }
  report["orbits"] = std::move(orbits);

  IntPoly rhs = IntPoly::constant(1);
  for (int x : dsc.degrees) rhs = rhs * IntPoly({x - 1, 1});
  verdicts.push_back(verdict("characteristic_sum", dsc.name(), sum.coeffs(), rhs.coeffs()));

  report["passports"] = passports_section(ctx, verdicts, true);
  return report;
}

json group_passports(const GroupContext& ctx) {
  json verdicts = json::array();
  json passports = passports_section(ctx, verdicts, false);
  return {{"schema_version", kSchemaVersion},
          {"command", "group passports"},
          {"descriptor", descriptor(ctx.group)},
          {"passports", std::move(passports)},
          {"verdicts", std::move(verdicts)}};
}

std::string flats_csv(const GroupContext& ctx) {
  const auto& lat = *ctx.lattice;
  const auto krew = ctx.engine->kreweras();
  std::ostringstream os;
  os << "id,name,tag,dim,codim,size,pointwise_order,setwise_order,index,char_poly,kreweras,primitive_count,"
        "primitive_formula,q_polynomial\n";
  const auto join = [](const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
  };
  const auto field = [](const std::string& v) {
    return v.find_first_of(",\"") == std::string::npos ? v : "\"" + v + "\"";
  };
  for (const auto& o : lat.orbits()) {
    const auto pc = ctx.engine->primitive_count(o.id);
    const auto cz = lat.cz_report(o.representative);
    const json formula = rational(Rational(static_cast<std::int64_t>(pc.formula_numerator), static_cast<std::int64_t>(pc.index)));
    os << o.id << ',' << field(o.name) << ',' << field(o.tag) << ',' << o.dim << ',' << o.codim << ',' << o.size() << ','
       << o.pointwise_order << ',' << o.setwise_order << ',' << o.index << ',' << join(o.char_poly.coeffs()) << ','
       << krew[static_cast<std::size_t>(o.id)].count << ',' << pc.count << ','
       << (formula.is_string() ? formula.get<std::string>() : formula.dump()) << ','
       << (cz.q_polynomial ? join(cz.q_polynomial->coeffs()) : "") << '\n';
  }
  return os.str();
}

json ll_rlbl(const ll::CenteredPolynomial& p) {
  const auto lab = ll::rlbl(p);
  json config = json::array();
  json verdicts = json::array();
  ll::Perm prod = ll::perm_identity(p.degree);
  for (std::size_t j = 0; j < lab.config.size(); ++j) {
    const auto& cv = lab.config[j];
    config.push_back({{"value", cplx_json(cv.value)},
                      {"multiplicity", cv.multiplicity},
                      {"label", ll::perm_to_string(lab.labels[j])}});
    prod = ll::perm_mul(prod, lab.labels[j]);
    verdicts.push_back(verdict("multiplicity_is_length", "value#" + std::to_string(j), cv.multiplicity,
                               ll::perm_length(lab.labels[j])));
  }
  const auto c = ll::coxeter_loop(p.degree);
  verdicts.push_back(verdict("label_product", p.to_string(), ll::perm_to_string(prod), ll::perm_to_string(c)));
  return {{"schema_version", kSchemaVersion},
          {"command", "ll rlbl"},
          {"polynomial", poly_json(p)},
          {"basepoint", cplx_json(lab.basepoint)},
          {"configuration", std::move(config)},
          {"coxeter_loop", ll::perm_to_string(c)},
          {"verdicts", std::move(verdicts)}};
}

json ll_fiber(int degree, std::uint64_t seed) {
  if (degree < 2 || degree > 6) throw std::invalid_argument("fiber exploration supports degrees 2..6");
  const auto p0 = ll::random_generic(degree, seed);
  const auto fiber = ll::explore_fiber(p0);

  auto g = ReflectionGroup::build(1, 1, degree);
  AbsoluteOrder ao(g);
  FlatLattice lat(g);
  FactorizationEngine eng(ao, lat, g.id_of(ll::to_element(ll::coxeter_loop(degree))));
  std::set<std::vector<ll::Perm>> red;
  for (const auto& t : eng.enumerate_red()) {
    std::vector<ll::Perm> labels;
    for (ElementId w : t) labels.push_back(ll::from_element(g.element(w)));
    red.insert(std::move(labels));
  }

  std::set<std::vector<ll::Perm>> seen;
  json members = json::array();
  for (const auto& m : fiber.members) {
    seen.insert(m.labels);
    members.push_back({{"polynomial", poly_json(m.poly)}, {"labels", labels_json(m.labels)}});
  }
  const std::string subject = "degree " + std::to_string(degree);
  json verdicts = json::array();
  verdicts.push_back(verdict("fiber_size", subject, fiber.members.size(), power(degree, degree - 2)));
  verdicts.push_back(verdict("labels_injective", subject, seen.size(), fiber.members.size()));
  std::size_t common = 0;
  for (const auto& l : seen) common += red.count(l);
  verdicts.push_back(verdict("labels_in_red", subject, common, seen.size()));
  verdicts.push_back(verdict("labels_exhaust_red", subject, seen.size(), red.size()));
  return {{"schema_version", kSchemaVersion},
          {"command", "ll fiber"},
          {"seed", seed},
          {"polynomial", poly_json(p0)},
          {"lifts", fiber.lifts},
          {"members", std::move(members)},
          {"verdicts", std::move(verdicts)}};
}

json ll_equivariance(int degree, int trials, std::uint64_t seed) {
  if (degree < 3) throw std::invalid_argument("equivariance needs degree >= 3");
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  json samples = json::array();
  json verdicts = json::array();
  for (int t = 0; t < trials; ++t) {
    const auto p = ll::random_generic(degree, seed + static_cast<std::uint64_t>(t));
    const auto i = static_cast<std::size_t>(t % (degree - 2));
    const auto before = ll::rlbl(p).labels;
    const auto after = ll::rlbl(ll::lift_swap(p, i, true)).labels;
    const auto moved = ll::hurwitz_forward(before, i);
    samples.push_back({{"polynomial", poly_json(p)}, {"swap", i}, {"labels", labels_json(before)}});
    verdicts.push_back(verdict("swap_equivariance", "trial " + std::to_string(t), labels_json(after), labels_json(moved)));
  }
  return {{"schema_version", kSchemaVersion},
          {"command", "ll equivariance"},
          {"degree", degree},
          {"seed", seed},
          {"samples", std::move(samples)},
          {"verdicts", std::move(verdicts)}};
}

std::optional<std::string> first_failure(const json& report) {
  for (const auto& v : report.at("verdicts")) {
    if (v.at("asserted").get<bool>() && !v.at("pass").get<bool>()) {
      return v.at("identity").get<std::string>() + "[" + v.at("subject").get<std::string>() + "]";
    }
  }
  return std::nullopt;
}

ll::cplx parse_complex(const std::string& raw) {
  std::string s;
  for (char ch : raw) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  const auto fail = [&] { return std::invalid_argument("not a complex number: '" + raw + "'"); };
  const auto number = [&](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    char* end = nullptr;
    const double x = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size()) throw fail();
    return x;
  };
  if (s.empty()) throw fail();
  if (s.back() != 'i') {
    if (s == "+" || s == "-") throw fail();
    return {number(s), 0.0};
  }
  s.pop_back();
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t cut = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      cut = k;
      break;
    }
  }
  if (cut == std::string::npos) return {0.0, number(s)};
  const std::string re = s.substr(0, cut);
  if (re.empty() || re == "+" || re == "-") throw fail();
  return {number(re), number(s.substr(cut))};
}

}  // namespace crg::report
