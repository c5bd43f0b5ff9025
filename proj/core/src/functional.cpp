#include "bellforge/functional.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

namespace bellforge {
namespace {

// FNV-1a 64-bit over the raw file bytes. Guards against transcription damage,
// not tampering.
constexpr std::uint64_t kAppendixFnv1a = 0x28aad6e6f113ab5fULL;
constexpr const char* kAppendixFileName = "appendix30.csv";

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::filesystem::path default_appendix_path() {
  std::vector<std::filesystem::path> candidates;
  if (const char* env = std::getenv("BELLFORGE_DATA_DIR")) {
    candidates.emplace_back(std::filesystem::path(env) / kAppendixFileName);
  }
#ifdef BELLFORGE_SOURCE_DATA_DIR
  candidates.emplace_back(std::filesystem::path(BELLFORGE_SOURCE_DATA_DIR) / kAppendixFileName);
#endif
#ifdef BELLFORGE_INSTALL_DATA_DIR
  candidates.emplace_back(std::filesystem::path(BELLFORGE_INSTALL_DATA_DIR) / kAppendixFileName);
#endif
  candidates.emplace_back(kAppendixFileName);
  for (const auto& p : candidates) {
    std::error_code ec;
    if (std::filesystem::exists(p, ec)) return p;
  }
  return candidates.front();
}

}  // namespace

BellFunctional dot_functional(const VertexSet& alice, const VertexSet& bob) {
  if (alice.size() == 0 || bob.size() == 0) {
    throw InvalidInput("dot_functional: empty vertex set");
  }
  Matrix c(alice.size(), bob.size());
  for (std::size_t x = 0; x < alice.size(); ++x) {
    for (std::size_t y = 0; y < bob.size(); ++y) {
      c(x, y) = alice[x].dot(star(bob[y]));
    }
  }
  return {std::move(c), "dot:" + alice.name() + "x" + bob.name()};
}

BellFunctional builtin_cuboct() {
  Matrix c(8, 6);
  for (int x = 0; x < 8; ++x) {
    const int bits[3] = {(x >> 2) & 1, (x >> 1) & 1, x & 1};  // x1 x2 x3
    int col = 0;
    for (int y1 = 1; y1 <= 3; ++y1) {
      for (int y2 = 0; y2 <= 1; ++y2, ++col) {
        c(x, col) = ((bits[y1 - 1] + y2) % 2 == 0) ? 1.0 : -1.0;
      }
    }
  }
  return {std::move(c), "cuboct"};
}

BellFunctional builtin_icodod() {
  static constexpr int kRows[6][10] = {
      {1, 1, 1, 0, 1, 1, 0, 0, 0, 0},
      {1, 1, 0, 1, 0, 0, 1, 1, 0, 0},
      {1, 0, 1, 1, 0, 0, 0, 0, 1, 1},
      {0, 1, 0, 0, 1, 0, 1, 0, -1, -1},
      {0, 0, 1, 0, 0, 1, -1, -1, 1, 0},
      {0, 0, 0, 1, -1, -1, 0, 1, 0, 1},
  };
  Matrix c(6, 10);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 10; ++y) c(x, y) = kRows[x][y];
  return {std::move(c), "icodod"};
}

BellFunctional builtin_chsh() {
  Matrix c(2, 2);
  c(0, 0) = 1;
  c(0, 1) = 1;
  c(1, 0) = 1;
  c(1, 1) = -1;
  return {std::move(c), "chsh"};
}

BellFunctional load_appendix_matrix() { return load_appendix_matrix(default_appendix_path()); }

BellFunctional load_appendix_matrix(const std::filesystem::path& csv_path) {
  std::ifstream in(csv_path, std::ios::binary);
  if (!in) {
    throw DataIntegrityError("appendix matrix data file missing: " + csv_path.string() +
                             " (set BELLFORGE_DATA_DIR to the packaged data directory)");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();
  if (fnv1a(bytes) != kAppendixFnv1a) {
    throw DataIntegrityError("appendix matrix data file corrupt (checksum mismatch): " +
                             csv_path.string());
  }

  Matrix c(30, 30);
  std::istringstream lines(bytes);
  std::string line;
  std::size_t row = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    if (row >= 30) throw FormatError("appendix matrix: more than 30 rows");
    std::size_t col = 0;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p < end) {
      const char* tok_end = p;
      while (tok_end < end && *tok_end != ',') ++tok_end;
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(p, tok_end, v);
      if (ec != std::errc() || ptr != tok_end || col >= 30) {
        throw FormatError("appendix matrix: bad entry at row " + std::to_string(row + 1) +
                          ", column " + std::to_string(col + 1));
      }
      c(row, col++) = v;
      p = tok_end < end ? tok_end + 1 : tok_end;
    }
    if (col != 30) {
      throw FormatError("appendix matrix: row " + std::to_string(row + 1) + " has " +
                        std::to_string(col) + " entries, expected 30");
    }
    ++row;
  }
  if (row != 30) throw FormatError("appendix matrix: found " + std::to_string(row) + " rows, expected 30");
  return {std::move(c), "appendix30"};
}

std::pair<std::vector<UnitVec3>, std::vector<UnitVec3>> cuboct_designed_measurements() {
  std::vector<UnitVec3> alice = platonic_vertices(Solid::Cube).vertices();
  // Column (y1,y2) measures along (-1)^y2 * star(e_{y1}) so that the correlator
  // sign matches the builtin coefficient for every x.
  std::vector<UnitVec3> bob = {UnitVec3(1, 0, 0),  UnitVec3(-1, 0, 0), UnitVec3(0, -1, 0),
                               UnitVec3(0, 1, 0),  UnitVec3(0, 0, 1),  UnitVec3(0, 0, -1)};
  return {std::move(alice), std::move(bob)};
}

std::pair<std::vector<UnitVec3>, std::vector<UnitVec3>> chsh_designed_measurements() {
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<UnitVec3> alice = {UnitVec3(1, 0, 0), UnitVec3(0, 0, 1)};
  std::vector<UnitVec3> bob = {UnitVec3(r, 0, r), UnitVec3(r, 0, -r)};
  return {std::move(alice), std::move(bob)};
}

}  // namespace bellforge
