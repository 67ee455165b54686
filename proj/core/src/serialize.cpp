#include <fjsa/serialize.hpp>

#include <json.hpp>
#include <openssl/evp.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

namespace fjsa {

using nlohmann::json;

namespace {

json gdim_json(const GDim& g) { return json::array({g.even.get_str(), g.odd.get_str()}); }

GDim gdim_from(const json& j) { return GDim(BigInt(j.at(0).get<std::string>()), BigInt(j.at(1).get<std::string>())); }

json laurent_json(const RLaurent& f) {
  json out = json::array();
  for (const auto& [e, c] : f.terms()) out.push_back(json::array({e, gdim_json(c)}));
  return out;
}

RLaurent laurent_from(const json& j) {
  std::map<int, GDim> terms;
  for (const auto& t : j) terms[t.at(0).get<int>()] = gdim_from(t.at(1));
  return RLaurent::from_terms(terms);
}

json weights_json(const std::map<int, GDim>& w) {
  json out = json::array();
  for (const auto& [k, g] : w) out.push_back(json::array({k, gdim_json(g)}));
  return out;
}

std::map<int, GDim> weights_from(const json& j) {
  std::map<int, GDim> out;
  for (const auto& t : j) out[t.at(0).get<int>()] = gdim_from(t.at(1));
  return out;
}

void check_header(const json& j, const char* format) {
  if (j.value("format", "") != format) throw FormatError(std::string("expected format ") + format);
  if (j.value("version", -1) != kFormatVersion) throw FormatError("format version mismatch");
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string jordan_to_json(const GradedJordanAlgebra& alg, bool budget_hit) {
  json comps = json::array();
  for (const auto& c : alg.components()) {
    json parity = json::array(), proj = json::array();
    for (Parity p : c.parity) parity.push_back(parity_bit(p));
    for (const auto& col : c.projection) {
      json v = json::array();
      for (const auto& [i, q] : col) v.push_back(json::array({i, q.get_str()}));
      proj.push_back(std::move(v));
    }
    comps.push_back({{"degree", c.degree},
                     {"parity", parity},
                     {"name", c.name},
                     {"projection", proj},
                     {"relation_rank", c.relation_rank}});
  }
  const json j = {{"format", "fjsa-jordan"}, {"version", kFormatVersion}, {"d1", alg.d1()},
                  {"d2", alg.d2()},          {"budget_hit", budget_hit},   {"components", comps}};
  return j.dump();
}

FrontierBuild jordan_from_json(std::string_view text) {
  return guarded([&] {
    const json j = json::parse(text);
    check_header(j, "fjsa-jordan");
    std::vector<JordanComponent> comps;
    for (const auto& c : j.at("components")) {
      JordanComponent jc;
      jc.degree = c.at("degree").get<int>();
      for (const auto& p : c.at("parity")) jc.parity.push_back(p.get<int>() ? Parity::Odd : Parity::Even);
      jc.name = c.at("name").get<std::vector<std::string>>();
      if (jc.name.size() != jc.parity.size()) throw FormatError("name/parity length mismatch");
      for (const auto& col : c.at("projection")) {
        SparseVec v;
        for (const auto& e : col) {
          const auto i = e.at(0).get<std::size_t>();
          if (i >= jc.parity.size()) throw FormatError("projection index out of range");
          v.emplace_back(i, Rational(e.at(1).get<std::string>()));
          v.back().second.canonicalize();
        }
        jc.projection.push_back(std::move(v));
      }
      jc.relation_rank = c.at("relation_rank").get<std::size_t>();
      comps.push_back(std::move(jc));
    }
    const long d1 = j.at("d1").get<long>(), d2 = j.at("d2").get<long>();
    return FrontierBuild{GradedJordanAlgebra::from_components(d1, d2, std::move(comps)), j.at("budget_hit").get<bool>()};
  });
}

std::string homology_report_to_json(const HomologyReport& rep) {
  json blocks = json::array(), euler = json::array();
  for (const auto& b : rep.blocks) {
    json mult = json::array();
    for (const auto& g : b.multiplicities.mult) mult.push_back(gdim_json(g));
    blocks.push_back({{"r", b.r},
                      {"degree", b.degree},
                      {"weights", weights_json(b.weights)},
                      {"total", gdim_json(b.total)},
                      {"multiplicities", mult},
                      {"odd_weights", gdim_json(b.multiplicities.odd_weights)},
                      {"negative", b.multiplicities.negative},
                      {"symmetric", b.multiplicities.symmetric},
                      {"invariants_vanish", b.invariants_vanish()}});
  }
  for (const auto& e : rep.euler)
    euler.push_back({{"degree", e.degree},
                     {"chains", laurent_json(e.chains)},
                     {"homology", laurent_json(e.homology)},
                     {"lambda", laurent_json(e.lambda)},
                     {"chains_complete", e.chains_complete},
                     {"homology_complete", e.homology_complete},
                     {"chains_match", e.chains_match()},
                     {"homology_match", e.homology_match()}});
  const json j = {{"format", "fjsa-homology"}, {"version", kFormatVersion},
                  {"d1", rep.d1},              {"d2", rep.d2},
                  {"r_max", rep.r_max},        {"d_max", rep.d_max},
                  {"d_squared_checks", rep.d_squared_checks},
                  {"blocks", blocks},          {"euler", euler}};
  return j.dump();
}

HomologyReport homology_report_from_json(std::string_view text) {
  return guarded([&] {
    const json j = json::parse(text);
    check_header(j, "fjsa-homology");
    HomologyReport rep;
    rep.d1 = j.at("d1").get<long>();
    rep.d2 = j.at("d2").get<long>();
    rep.r_max = j.at("r_max").get<int>();
    rep.d_max = j.at("d_max").get<int>();
    rep.d_squared_checks = j.at("d_squared_checks").get<std::size_t>();
    for (const auto& b : j.at("blocks")) {
      HomologyBlock hb;
      hb.r = b.at("r").get<int>();
      hb.degree = b.at("degree").get<int>();
      hb.weights = weights_from(b.at("weights"));
      hb.total = gdim_from(b.at("total"));
      for (const auto& g : b.at("multiplicities")) hb.multiplicities.mult.push_back(gdim_from(g));
      hb.multiplicities.odd_weights = gdim_from(b.at("odd_weights"));
      hb.multiplicities.negative = b.at("negative").get<bool>();
      hb.multiplicities.symmetric = b.at("symmetric").get<bool>();
      rep.blocks.push_back(std::move(hb));
    }
    for (const auto& e : j.at("euler")) {
      EulerCheck ec;
      ec.degree = e.at("degree").get<int>();
      ec.chains = laurent_from(e.at("chains"));
      ec.homology = laurent_from(e.at("homology"));
      ec.lambda = laurent_from(e.at("lambda"));
      ec.chains_complete = e.at("chains_complete").get<bool>();
      ec.homology_complete = e.at("homology_complete").get<bool>();
      rep.euler.push_back(std::move(ec));
    }
    if (rep.blocks.size() != static_cast<std::size_t>((rep.r_max + 1) * (rep.d_max + 1)))
      throw FormatError("block count does not match r_max and d_max");
    return rep;
  });
}

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path Cache::default_dir() {
  if (const char* d = std::getenv("FJSA_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "fjsa";
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "fjsa";
  return ".fjsa-cache";
}

std::filesystem::path Cache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<std::string> Cache::load(const std::string& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void Cache::store(const std::string& key, std::string_view content) const {
  std::filesystem::create_directories(dir_);
  const auto target = path_for(key);
  std::random_device rd;
  auto tmp = target;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out.flush()) throw std::runtime_error("cannot write cache entry " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

std::string jordan_cache_key(long d1, long d2, int n, std::size_t entry_budget) {
  std::ostringstream os;
  os << "fjsa-jordan|v" << kFormatVersion << "|" << d1 << "|" << d2 << "|" << n << "|" << entry_budget;
  return sha256_hex(os.str());
}

CachedBuild cached_free_jordan(const Cache& cache, long d1, long d2, int n, std::size_t entry_budget) {
  const std::string key = jordan_cache_key(d1, d2, n, entry_budget);
  if (const auto text = cache.load(key)) {
    try {
      FrontierBuild fb = jordan_from_json(*text);
      if (fb.algebra.d1() == d1 && fb.algebra.d2() == d2) return {std::move(fb), true, {}};
    } catch (const FormatError&) {
      // unreadable entries are rebuilt and overwritten
    }
  }
  JordanBuildOptions opts;
  opts.entry_budget = entry_budget;
  FrontierBuild fb = build_free_jordan_frontier(d1, d2, n, opts);
  CachedBuild out{std::move(fb), false, {}};
  try {
    cache.store(key, jordan_to_json(out.build.algebra, out.build.budget_hit));
  } catch (const std::exception& e) {
    out.store_error = e.what();
  }
  return out;
}

}  // namespace fjsa
