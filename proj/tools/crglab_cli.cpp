#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "crglab/report.hpp"

namespace {

using crg::report::json;

struct GroupArgs {
  int d = 1;
  int r = 1;
  int n = 3;
};

void add_group_args(CLI::App* cmd, GroupArgs& a) {
  cmd->add_option("--d", a.d, "G(d, r, n) parameter d")->required();
  cmd->add_option("--r", a.r, "G(d, r, n) parameter r")->required();
  cmd->add_option("--n", a.n, "G(d, r, n) parameter n")->required();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int finish(const json& report, const std::string& out) {
  const std::string text = report.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text(out, text);
  }
  if (auto bad = crg::report::first_failure(report)) {
    std::cerr << "FAIL " << *bad << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reflection factorizations and the Lyashko-Looijenga map"};
  app.require_subcommand(1);
  std::string out;
  std::string csv;
  std::string cache;
  app.add_option("--out", out, "write the JSON report here instead of stdout");

  GroupArgs ga;
  auto* group = app.add_subcommand("group", "finite group computations");
  group->require_subcommand(1);
  auto* info = group->add_subcommand("info", "numerology and degrees");
  auto* verify = group->add_subcommand("verify", "full identity suite");
  auto* passports = group->add_subcommand("passports", "passport census");
  for (auto* cmd : {info, verify, passports}) {
    add_group_args(cmd, ga);
    cmd->add_option("--out", out, "write the JSON report here instead of stdout");
  }
  for (auto* cmd : {verify, passports}) cmd->add_option("--cache", cache, "cache directory for lattices and tables");
  verify->add_option("--csv", csv, "also write the orbit table as CSV");

  int degree = 3;
  std::uint64_t seed = 0;
  int trials = 20;
  std::vector<std::string> coeffs;
  auto* ll = app.add_subcommand("ll", "numerical Lyashko-Looijenga lab");
  ll->require_subcommand(1);
  auto* rlbl = ll->add_subcommand("rlbl", "monodromy labels of one polynomial");
  auto* fiber = ll->add_subcommand("fiber", "explore a generic fiber");
  auto* equi = ll->add_subcommand("equivariance", "half-turn lifts against Hurwitz moves");
  for (auto* cmd : {rlbl, fiber, equi}) {
    cmd->add_option("--degree", degree, "polynomial degree")->required()->check(CLI::Range(2, 12));
    cmd->add_option("--out", out, "write the JSON report here instead of stdout");
  }
  rlbl->add_option("--coeffs", coeffs, "a_2 ... a_m as complex numbers like 1-2i")->required();
  for (auto* cmd : {fiber, equi}) cmd->add_option("--seed", seed, "random seed");
  equi->add_option("--trials", trials, "number of random samples");

  CLI11_PARSE(app, argc, argv);

  try {
    const std::optional<std::filesystem::path> cache_dir =
        cache.empty() ? std::nullopt : std::optional<std::filesystem::path>(cache);
    if (*info) {
      return finish(crg::report::group_info(crg::ReflectionGroup::build(ga.d, ga.r, ga.n)), out);
    }
    if (*verify) {
      const auto ctx = crg::load_context(ga.d, ga.r, ga.n, cache_dir);
      if (!csv.empty()) write_text(csv, crg::report::flats_csv(*ctx));
      return finish(crg::report::group_verify(*ctx), out);
    }
    if (*passports) {
      return finish(crg::report::group_passports(*crg::load_context(ga.d, ga.r, ga.n, cache_dir)), out);
    }
    if (*rlbl) {
      if (static_cast<int>(coeffs.size()) != degree - 1) {
        throw std::invalid_argument("--coeffs needs degree - 1 values (a_2 ... a_m)");
      }
      std::vector<crg::ll::cplx> a;
      for (const auto& c : coeffs) a.push_back(crg::report::parse_complex(c));
      return finish(crg::report::ll_rlbl(crg::ll::CenteredPolynomial(degree, a)), out);
    }
    if (*fiber) return finish(crg::report::ll_fiber(degree, seed), out);
    if (*equi) return finish(crg::report::ll_equivariance(degree, trials, seed), out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
