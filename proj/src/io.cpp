#include "zonospline/io.hpp"

#include <array>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace zonospline {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kConfigFormat = "zonospline-config/1";
constexpr const char* kTilingFormat = "zonospline-tiling/1";

json config_to_json_obj(const ConfigDocument& doc) {
  json j;
  j["format"] = kConfigFormat;
  j["dim"] = doc.config.dim;
  json pts = json::array();
  for (const Point& p : doc.config.points) {
    json row = json::array();
    for (const Rational& c : p) row.push_back(rational_to_string(c));
    pts.push_back(std::move(row));
  }
  j["points"] = std::move(pts);
  if (doc.heights) {
    json hs = json::array();
    for (const Rational& h : doc.heights->values)
      hs.push_back(rational_to_string(h));
    j["heights"] = std::move(hs);
  }
  if (doc.seed) j["seed"] = *doc.seed;
  return j;
}

ConfigDocument config_from_json_obj(const json& j) {
  if (!j.is_object()) throw DocumentError("config document is not an object");
  if (!j.contains("dim")) throw DocumentError("config document misses 'dim'");
  if (!j.contains("points"))
    throw DocumentError("config document misses 'points'");
  ConfigDocument doc;
  int dim = j.at("dim").get<int>();
  std::vector<Point> points;
  for (const auto& row : j.at("points")) {
    Point p;
    for (const auto& c : row) p.push_back(parse_rational(c.get<std::string>()));
    if (static_cast<int>(p.size()) != dim)
      throw DocumentError("point does not match the declared dimension");
    points.push_back(std::move(p));
  }
  try {
    doc.config = make_config(dim, std::move(points));
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }
  if (j.contains("heights")) {
    HeightFunction h;
    for (const auto& v : j.at("heights"))
      h.values.push_back(parse_rational(v.get<std::string>()));
    if (h.size() != doc.config.size())
      throw DocumentError("height count does not match point count");
    doc.heights = std::move(h);
  }
  if (j.contains("seed")) doc.seed = j.at("seed").get<std::uint64_t>();
  return doc;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DocumentError("cannot write file: " + path);
  out << content;
}

ConfigDocument parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  return config_from_json_obj(j);
}

ConfigDocument load_config(const std::string& path) {
  return parse_config(read_file(path));
}

HeightFunction load_heights(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("heights"))
    throw DocumentError("height file carries no 'heights' array");
  HeightFunction h;
  for (const auto& v : j.at("heights"))
    h.values.push_back(parse_rational(v.get<std::string>()));
  return h;
}

std::string canonical_config_json(const ConfigDocument& doc) {
  return config_to_json_obj(doc).dump(2) + "\n";
}

// --- SHA-256 (FIPS 180-4), enough for content digests ---
std::string sha256_hex(const std::string& bytes) {
  static constexpr std::array<std::uint32_t, 64> K = {
      0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1,
      0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3,
      0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786,
      0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
      0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
      0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13,
      0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
      0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
      0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a,
      0x5b9cca4f, 0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
      0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};
  std::array<std::uint32_t, 8> h = {0x6a09e667, 0xbb67ae85, 0x3c6ef372,
                                    0xa54ff53a, 0x510e527f, 0x9b05688c,
                                    0x1f83d9ab, 0x5be0cd19};
  std::string msg = bytes;
  std::uint64_t bitlen = static_cast<std::uint64_t>(msg.size()) * 8;
  msg.push_back(static_cast<char>(0x80));
  while (msg.size() % 64 != 56) msg.push_back('\0');
  for (int i = 7; i >= 0; --i)
    msg.push_back(static_cast<char>((bitlen >> (8 * i)) & 0xff));

  auto rotr = [](std::uint32_t v, int n) { return (v >> n) | (v << (32 - n)); };
  for (size_t off = 0; off < msg.size(); off += 64) {
    std::array<std::uint32_t, 64> w{};
    for (int t = 0; t < 16; ++t)
      w[static_cast<size_t>(t)] =
          (static_cast<std::uint32_t>(static_cast<unsigned char>(msg[off + 4 * t])) << 24) |
          (static_cast<std::uint32_t>(static_cast<unsigned char>(msg[off + 4 * t + 1])) << 16) |
          (static_cast<std::uint32_t>(static_cast<unsigned char>(msg[off + 4 * t + 2])) << 8) |
          static_cast<std::uint32_t>(static_cast<unsigned char>(msg[off + 4 * t + 3]));
    for (int t = 16; t < 64; ++t) {
      std::uint32_t s0 = rotr(w[t - 15], 7) ^ rotr(w[t - 15], 18) ^ (w[t - 15] >> 3);
      std::uint32_t s1 = rotr(w[t - 2], 17) ^ rotr(w[t - 2], 19) ^ (w[t - 2] >> 10);
      w[static_cast<size_t>(t)] = w[t - 16] + s0 + w[t - 7] + s1;
    }
    auto [a, b, c, d, e, f, g, hh] = h;
    for (int t = 0; t < 64; ++t) {
      std::uint32_t S1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
      std::uint32_t ch = (e & f) ^ (~e & g);
      std::uint32_t t1 = hh + S1 + ch + K[static_cast<size_t>(t)] + w[static_cast<size_t>(t)];
      std::uint32_t S0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
      std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
      std::uint32_t t2 = S0 + maj;
      hh = g; g = f; f = e; e = d + t1;
      d = c; c = b; b = a; a = t1 + t2;
    }
    h = {h[0] + a, h[1] + b, h[2] + c, h[3] + d,
         h[4] + e, h[5] + f, h[6] + g, h[7] + hh};
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (std::uint32_t v : h)
    for (int i = 7; i >= 0; --i) out.push_back(hex[(v >> (4 * i)) & 0xf]);
  return out;
}

std::string config_hash(const ConfigDocument& doc) {
  return sha256_hex(canonical_config_json(doc));
}

std::string tiling_to_json(const ZonotopalTiling& tiling) {
  if (static_cast<int>(tiling.active.size()) != tiling.config.size())
    throw DocumentError("only tilings over the full configuration are serialized");
  ConfigDocument cfg{tiling.config, tiling.height, std::nullopt};
  json j;
  j["format"] = kTilingFormat;
  j["config_hash"] = config_hash(cfg);
  j["config"] = config_to_json_obj(cfg);
  j["max_order"] = tiling.max_order;
  json orders = json::object();
  for (int k = 0; k <= tiling.max_order; ++k) {
    json layer = json::array();
    for (const Tile* t : tiling.tiles_of_order(k)) {
      json tj;
      tj["I"] = t->shift;
      tj["B"] = t->basis;
      layer.push_back(std::move(tj));
    }
    orders[std::to_string(k)] = std::move(layer);
  }
  j["orders"] = std::move(orders);
  return j.dump(2) + "\n";
}

ZonotopalTiling tiling_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("format", "") != kTilingFormat)
    throw DocumentError("not a tiling document");
  ConfigDocument cfg = config_from_json_obj(j.at("config"));
  if (!cfg.heights)
    throw DocumentError("tiling document misses the height function");
  if (j.value("config_hash", "") != config_hash(cfg))
    throw DocumentError("config hash mismatch: document is corrupted");

  ZonotopalTiling tiling;
  tiling.config = cfg.config;
  tiling.height = *cfg.heights;
  tiling.active.resize(static_cast<size_t>(tiling.config.size()));
  std::iota(tiling.active.begin(), tiling.active.end(), 0);
  tiling.max_order = j.at("max_order").get<int>();
  for (const auto& [order, layer] : j.at("orders").items()) {
    (void)order;
    for (const auto& tj : layer) {
      std::vector<int> I = tj.at("I").get<std::vector<int>>();
      std::vector<int> B = tj.at("B").get<std::vector<int>>();
      for (int i : B)
        if (i < 0 || i >= tiling.config.size())
          throw DocumentError("tile index out of range");
      auto ob = det_plus(tiling.config, B);
      if (!ob) throw DocumentError("degenerate tile basis in document");
      Tile t;
      t.basis = ob->sorted();
      t.swapped = ob->order != t.basis;
      t.det = ob->det;
      std::sort(I.begin(), I.end());
      t.shift = std::move(I);
      tiling.tiles.push_back(std::move(t));
    }
  }
  tiling.sort_canonical();
  return tiling;
}

void save_tiling(const ZonotopalTiling& tiling, const std::string& path) {
  write_file(path, tiling_to_json(tiling));
}

ZonotopalTiling load_tiling(const std::string& path) {
  return tiling_from_json(read_file(path));
}

}  // namespace zonospline
