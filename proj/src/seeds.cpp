#include "realenum/seeds.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace realenum {

namespace {

using Json = nlohmann::json;

SeedEntry parse_entry(const Json& item, std::size_t index, const std::string& source) {
  auto fail = [&](const std::string& why) -> SeedFileError {
    return SeedFileError(source + ": entry " + std::to_string(index) + ": " + why);
  };
  if (!item.is_object()) throw fail("expected an object");
  for (const char* key : {"surface", "sigma", "s", "value", "provenance"})
    if (!item.contains(key)) throw fail(std::string("missing field '") + key + "'");
  const Json& surf = item["surface"];
  for (const char* key : {"c1d", "dd", "label"})
    if (!surf.contains(key)) throw fail(std::string("surface is missing '") + key + "'");

  try {
    SurfaceClass cls(surf["c1d"].get<long long>(), surf["dd"].get<long long>(),
                     surf["label"].get<std::string>());
    const LatticeIndex idx{item["sigma"].get<long long>(), item["s"].get<long long>()};
    if (theta_domain(cls, idx) != CellDomain::Valid)
      throw fail("cell sigma=" + std::to_string(idx.sigma) + " s=" + std::to_string(idx.s) +
                 " is " + to_string(theta_domain(cls, idx)) + " for '" + cls.label() + "'");
    const std::string provenance = item["provenance"].get<std::string>();
    if (provenance.empty()) throw fail("provenance must be nonempty");
    return SeedEntry{cls, idx, Integer(item["value"].get<long long>()), provenance};
  } catch (const std::invalid_argument& e) {
    throw fail(e.what());
  }
}

}  // namespace

SeedDatabase parse_seed_database(const std::string& json_text, const std::string& source_label) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw SeedFileError(source_label + ": " + e.what());
  }
  if (!doc.is_array()) throw SeedFileError(source_label + ": expected a JSON array");

  SeedDatabase db;
  db.source_path = source_label;
  std::set<std::tuple<long long, long long, std::string, long long, long long>> keys;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    SeedEntry entry = parse_entry(doc[i], i, source_label);
    const auto key = std::make_tuple(entry.cls.c1d(), entry.cls.dd(), entry.cls.label(),
                                     entry.idx.sigma, entry.idx.s);
    if (!keys.insert(key).second)
      throw SeedFileError(source_label + ": duplicate seed for '" + entry.cls.label() +
                          "' at sigma=" + std::to_string(entry.idx.sigma) +
                          " s=" + std::to_string(entry.idx.s));
    db.entries.push_back(std::move(entry));
  }
  return db;
}

SeedDatabase load_seed_database(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SeedFileError("cannot open seed file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_seed_database(buffer.str(), path);
}

std::vector<SeedEntry> seeds_for(const SeedDatabase& db, const SurfaceClass& cls) {
  std::vector<SeedEntry> out;
  for (const auto& entry : db.entries)
    if (entry.cls == cls) out.push_back(entry);
  return out;
}

std::string default_seed_path() {
  if (const char* env = std::getenv("REALENUM_SEEDS"); env && *env) return env;
  return std::string(REALENUM_SOURCE_DIR) + "/data/paper.json";
}

}  // namespace realenum
