#include "algebra_file.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "dias/errors.hpp"

namespace dias::cli {

namespace {

std::size_t index_field(const Json& entry, const char* key, std::size_t n) {
  if (!entry.contains(key) || !entry[key].is_number_unsigned()) {
    throw ParseError(std::string("entry needs a non-negative integer '") + key + "'");
  }
  auto v = entry[key].get<std::uint64_t>();
  if (v >= n) throw ParseError(std::string("index '") + key + "' = " + std::to_string(v) + " out of range");
  return static_cast<std::size_t>(v);
}

StructureTensor parse_products(const Json& list, const FieldSpec& f, std::size_t n, const char* which) {
  StructureTensor t(f, n);
  if (list.is_null()) return t;
  if (!list.is_array()) throw ParseError(std::string("'") + which + "' must be an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& entry : list) {
    if (!entry.is_object()) throw ParseError(std::string("'") + which + "' entries must be objects");
    std::size_t i = index_field(entry, "i", n);
    std::size_t j = index_field(entry, "j", n);
    if (!seen.insert({i, j}).second) {
      throw ParseError(std::string("duplicate ") + which + " entry for (" + std::to_string(i) + ", " +
                       std::to_string(j) + ")");
    }
    if (!entry.contains("c") || !entry["c"].is_array()) throw ParseError("entry needs an array 'c'");
    std::set<std::size_t> ks;
    for (const auto& term : entry["c"]) {
      if (!term.is_object()) throw ParseError("'c' terms must be objects");
      std::size_t k = index_field(term, "k", n);
      if (!ks.insert(k).second) throw ParseError("duplicate k in one product entry");
      if (!term.contains("v")) throw ParseError("term needs a value 'v'");
      t.set(i, j, k, scalar_from_json(f, term["v"]));
    }
  }
  return t;
}

Json products_to_json(const StructureTensor& t) {
  Json list = Json::array();
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Json terms = Json::array();
      for (std::size_t k = 0; k < n; ++k) {
        if (!t(i, j, k).is_zero()) terms.push_back(Json{{"k", k}, {"v", scalar_to_json(t(i, j, k))}});
      }
      if (!terms.empty()) list.push_back(Json{{"i", i}, {"j", j}, {"c", std::move(terms)}});
    }
  }
  return list;
}

}  // namespace

Json field_to_json(const FieldSpec& f) {
  if (f.is_rational()) return Json{{"kind", "rational"}};
  return Json{{"kind", "prime"}, {"p", f.modulus()}};
}

FieldSpec field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError("'field' must be an object with a string 'kind'");
  }
  const auto kind = j["kind"].get<std::string>();
  if (kind == "rational") return FieldSpec::rational();
  if (kind == "prime") {
    if (!j.contains("p") || !j["p"].is_number_unsigned()) throw ParseError("prime field needs an integer 'p'");
    try {
      return FieldSpec::prime(j["p"].get<std::uint64_t>());
    } catch (const InvalidField& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown field kind '" + kind + "'");
}

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const FieldSpec& f, const Json& j) {
  try {
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::from_rational(f, mpq_class(mpz_class(j.dump())));
  } catch (const ArithmeticError& e) {
    throw ParseError(e.what());
  }
  throw ParseError("scalar must be a string such as \"3/2\" or an integer");
}

Json vector_to_json(std::span<const Scalar> v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

AlgebraFile parse_algebra_file(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
  if (!j.contains("field")) throw ParseError("missing 'field'");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned()) throw ParseError("missing non-negative 'dim'");
  const FieldSpec f = field_from_json(j["field"]);
  const auto n = j["dim"].get<std::size_t>();

  AlgebraFile file;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("'name' must be a string");
    file.name = j["name"].get<std::string>();
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || j["labels"].size() != n) throw ParseError("'labels' must list dim strings");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw ParseError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  auto left = parse_products(j.value("left", Json()), f, n, "left");
  auto right = parse_products(j.value("right", Json()), f, n, "right");
  file.algebra = DiasAlgebra(std::move(left), std::move(right), std::move(labels));
  return file;
}

AlgebraFile read_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra_file(ss.str());
}

Json to_json(const AlgebraFile& file) {
  const DiasAlgebra& L = file.algebra;
  Json j;
  j["name"] = file.name;
  j["field"] = field_to_json(L.field());
  j["dim"] = L.dim();
  if (!L.labels().empty()) j["labels"] = L.labels();
  j["left"] = products_to_json(L.tensor(Product::left));
  j["right"] = products_to_json(L.tensor(Product::right));
  return j;
}

std::string serialize(const AlgebraFile& file) { return to_json(file).dump(2) + "\n"; }

void write_algebra_file(const std::string& path, const AlgebraFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << serialize(file);
}

}  // namespace dias::cli
