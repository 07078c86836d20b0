#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "realenum/lattice.hpp"

namespace realenum {

class SeedFileError : public std::runtime_error {
 public:
  explicit SeedFileError(const std::string& what) : std::runtime_error(what) {}
};

// A validated list of seed values loaded from a JSON file. Format: an array of
// objects {surface: {c1d, dd, label}, sigma, s, value, provenance}. Entries
// must sit on Valid cells of their class, carry nonempty provenance, and no
// (surface, sigma, s) key may repeat.
struct SeedDatabase {
  std::vector<SeedEntry> entries;
  std::string source_path;
};

SeedDatabase load_seed_database(const std::string& path);
SeedDatabase parse_seed_database(const std::string& json_text, const std::string& source_label);

std::vector<SeedEntry> seeds_for(const SeedDatabase& db, const SurfaceClass& cls);

// REALENUM_SEEDS env var, else the bundled data/paper.json.
std::string default_seed_path();

}  // namespace realenum
