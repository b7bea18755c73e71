#pragma once

#include <stdexcept>
#include <string>

#include "dias/algebra.hpp"
#include "json.hpp"

namespace dias::cli {

using Json = nlohmann::ordered_json;

/// Malformed input: bad JSON, out-of-range indices, duplicate entries.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AlgebraFile {
  std::string name;
  DiasAlgebra algebra;
};

AlgebraFile parse_algebra_file(const std::string& text);
AlgebraFile read_algebra_file(const std::string& path);

Json to_json(const AlgebraFile& file);
/// Two-space indented JSON with a trailing newline. Entries are sorted by
/// (i, j) and then k, so equal tensors give identical bytes.
std::string serialize(const AlgebraFile& file);
void write_algebra_file(const std::string& path, const AlgebraFile& file);

Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const FieldSpec& f, const Json& j);
Json vector_to_json(std::span<const Scalar> v);
Json matrix_to_json(const Matrix& m);

}  // namespace dias::cli
