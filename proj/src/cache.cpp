#include "crglab/cache.hpp"

#include <fstream>
#include <json.hpp>
#include <string>

namespace crg {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

json encode(const GroupElement& w) {
  return json::array({std::vector<int>(w.perm.begin(), w.perm.end()), std::vector<int>(w.weights.begin(), w.weights.end())});
}

GroupElement decode(const json& j, int d) {
  GroupElement w;
  w.d = d;
  for (int x : j.at(0).get<std::vector<int>>()) w.perm.push_back(static_cast<std::uint8_t>(x));
  for (int x : j.at(1).get<std::vector<int>>()) w.weights.push_back(static_cast<std::uint8_t>(x));
  return w;
}

json header(const ReflectionGroup& g, const char* kind) {
  return {{"format_version", kCacheFormatVersion},
          {"kind", kind},
          {"d", g.d()},
          {"r", g.r()},
          {"n", g.n()},
          {"order", g.size()}};
}

// Parsed file when it exists and carries a matching header, else nullopt.
std::optional<json> read(const fs::path& file, const ReflectionGroup& g, const char* kind) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  const json want = header(g, kind);
  for (const auto& [k, v] : want.items()) {
    if (!j.contains(k) || j[k] != v) return std::nullopt;
  }
  return j;
}

void write(const fs::path& file, const json& j) {
  const fs::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << j.dump() << '\n';
  }
  fs::rename(tmp, file);
}

std::optional<std::vector<std::uint8_t>> load_lengths(const json& j, const ReflectionGroup& g) {
  std::vector<std::uint8_t> out(g.size(), 0);
  std::vector<char> seen(g.size(), 0);
  for (const auto& e : j.at("entries")) {
    const auto id = g.find(decode(e.at(0), g.d()));
    if (!id || seen[*id]) return std::nullopt;
    seen[*id] = 1;
    out[*id] = static_cast<std::uint8_t>(e.at(1).get<int>());
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return std::nullopt;
  return out;
}

json dump_lengths(const AbsoluteOrder& ao) {
  const auto& g = ao.group();
  json j = header(g, "lengths");
  json entries = json::array();
  for (ElementId w = 0; w < g.size(); ++w) entries.push_back(json::array({encode(g.element(w)), ao.length(w)}));
  j["entries"] = std::move(entries);
  return j;
}

LatticeData load_lattice(const json& j, int d) {
  LatticeData data;
  for (const auto& f : j.at("flats")) {
    Flat z;
    z.d = d;
    for (int b : f.at(0).get<std::vector<int>>()) z.block.push_back(static_cast<std::int8_t>(b));
    for (int o : f.at(1).get<std::vector<int>>()) z.offset.push_back(static_cast<std::uint8_t>(o));
    z.num_blocks = f.at(2).get<int>();
    data.flats.push_back(std::move(z));
  }
  data.orbits = j.at("orbits").get<std::vector<std::vector<FlatId>>>();
  return data;
}

json dump_lattice(const FlatLattice& lat) {
  json j = header(lat.group(), "lattice");
  const auto data = lat.data();
  json flats = json::array();
  for (const auto& z : data.flats) {
    flats.push_back(json::array({std::vector<int>(z.block.begin(), z.block.end()),
                                 std::vector<int>(z.offset.begin(), z.offset.end()), z.num_blocks}));
  }
  j["flats"] = std::move(flats);
  j["orbits"] = data.orbits;
  return j;
}

}  // namespace

std::unique_ptr<GroupContext> load_context(int d, int r, int n, const std::optional<fs::path>& cache_dir) {
  auto ctx = std::make_unique<GroupContext>(GroupContext{ReflectionGroup::build(d, r, n), {}, {}, {}, false});
  const ReflectionGroup& g = ctx->group;
  const ElementId c = g.coxeter_element();

  std::optional<fs::path> dir;
  if (cache_dir) {
    dir = *cache_dir / (std::to_string(d) + "_" + std::to_string(r) + "_" + std::to_string(n));
    fs::create_directories(*dir);
  }

  int hits = 0;
  if (dir) {
    if (auto j = read(*dir / "lengths.json", g, "lengths")) {
      try {
        if (auto table = load_lengths(*j, g)) {
          ctx->order = std::make_unique<AbsoluteOrder>(g, std::move(*table));
          ++hits;
        }
      } catch (const std::exception&) {
      }
    }
  }
  if (!ctx->order) {
    ctx->order = std::make_unique<AbsoluteOrder>(g);
    if (dir) write(*dir / "lengths.json", dump_lengths(*ctx->order));
  }

  if (dir) {
    if (auto j = read(*dir / "lattice.json", g, "lattice")) {
      try {
        ctx->lattice = std::make_unique<FlatLattice>(g, load_lattice(*j, d));
        ++hits;
      } catch (const std::exception&) {
      }
    }
  }
  if (!ctx->lattice) {
    ctx->lattice = std::make_unique<FlatLattice>(g);
    if (dir) write(*dir / "lattice.json", dump_lattice(*ctx->lattice));
  }

  if (dir) {
    if (auto j = read(*dir / "nc.json", g, "nc")) {
      try {
        if (decode(j->at("coxeter"), d) == g.element(c)) {
          std::vector<ElementId> nc;
          for (const auto& e : j->at("elements")) nc.push_back(g.id_of(decode(e, d)));
          std::sort(nc.begin(), nc.end());
          ctx->engine = std::make_unique<FactorizationEngine>(*ctx->order, *ctx->lattice, c, std::move(nc));
          ++hits;
        }
      } catch (const std::exception&) {
      }
    }
  }
  if (!ctx->engine) {
    ctx->engine = std::make_unique<FactorizationEngine>(*ctx->order, *ctx->lattice, c);
    if (dir) {
      json j = header(g, "nc");
      j["coxeter"] = encode(g.element(c));
      json elems = json::array();
      for (ElementId u : ctx->engine->nc()) elems.push_back(encode(g.element(u)));
      j["elements"] = std::move(elems);
      write(*dir / "nc.json", j);
    }
  }
  ctx->from_cache = hits == 3;
  return ctx;
}

}  // namespace crg
