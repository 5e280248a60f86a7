#ifndef ZONOSPLINE_IO_HPP
#define ZONOSPLINE_IO_HPP

#include <optional>
#include <string>

#include "zonospline/tiling.hpp"

namespace zonospline {

struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigDocument {
  PointConfig config;
  std::optional<HeightFunction> heights;
  std::optional<std::uint64_t> seed;
};

// UTF-8 JSON with exact numbers as strings ("p", "p/q" or decimal on input;
// canonical "p" / "p/q" on output). Round-trips byte-identically after
// canonicalization.
ConfigDocument load_config(const std::string& path);
ConfigDocument parse_config(const std::string& json_text);

// Either a bare {"heights": [...]} document or a full config document
// carrying a heights array.
HeightFunction load_heights(const std::string& path);
std::string canonical_config_json(const ConfigDocument& doc);

// SHA-256 hex digest of the canonical config bytes; binds tiling documents
// to the configuration they were built from.
std::string sha256_hex(const std::string& bytes);
std::string config_hash(const ConfigDocument& doc);

// Tiles as {"I": [...], "B": [...]} grouped by order, plus the embedded
// canonical config and its hash.
std::string tiling_to_json(const ZonotopalTiling& tiling);
ZonotopalTiling tiling_from_json(const std::string& json_text);
void save_tiling(const ZonotopalTiling& tiling, const std::string& path);
ZonotopalTiling load_tiling(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace zonospline

#endif
