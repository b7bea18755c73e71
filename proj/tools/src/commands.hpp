#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "algebra_file.hpp"

namespace dias::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitUsage = 64;

inline constexpr const char* kToolName = "dias";
inline constexpr const char* kToolVersion = "1.0.0";

/// Bad ideal specification, unknown corpus id and similar usage problems.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  bool timing = false;
  bool assert_property = false;
  bool corpus = false;
  std::string ideal = "center";
  std::string field = "Q";
  unsigned jobs = 1;
  std::uint64_t seed = 1;
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

std::string sha256_hex(const std::string& bytes);
FieldSpec parse_field_name(const std::string& name);

/// "zero", "center", "derived", or basis rows "1,0,0;0,1/2,0".
Subspace parse_ideal(const DiasAlgebra& L, const std::string& spec);

int cmd_validate(const std::string& path, const Options& o, Streams s);
int cmd_info(const std::string& path, const Options& o, Streams s);
int cmd_multiplier(const std::string& path, const Options& o, Streams s);
int cmd_cover(const std::string& path, const std::string& out_path, const Options& o, Streams s);
int cmd_zstar(const std::string& path, const Options& o, Streams s);
int cmd_unicentral(const std::string& path, const Options& o, Streams s);
/// With o.corpus set, `path` is ignored and every corpus pair is swept.
int cmd_sequences(const std::string& path, const Options& o, Streams s);
int cmd_thm49(const std::string& path, const Options& o, Streams s);
int cmd_catalog_list(const Options& o, Streams s);
int cmd_catalog_emit(const std::string& id, const std::string& out_path, const Options& o, Streams s);

}  // namespace dias::cli
