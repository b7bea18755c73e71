#include "commands.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "dias/catalog.hpp"
#include "dias/errors.hpp"
#include "dias/extensions.hpp"

namespace dias::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Input {
  AlgebraFile file;
  std::string digest;
};

Input load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string bytes = ss.str();
  return {parse_algebra_file(bytes), sha256_hex(bytes)};
}

class Run {
 public:
  Run(std::string command, const Options& o, Streams s) : command_(std::move(command)), o_(o), s_(s) {}

  int emit(const std::string& digest, Json results, const std::string& text, int code) const {
    if (o_.json) {
      Json env;
      env["tool"] = kToolName;
      env["version"] = kToolVersion;
      env["command"] = command_;
      env["input_sha256"] = digest;
      env["exit_code"] = code;
      env["results"] = std::move(results);
      if (o_.timing) {
        env["timing"] = {{"wall_ms", std::chrono::duration<double, std::milli>(Clock::now() - start_).count()}};
      }
      s_.out << env.dump(2) << "\n";
    } else {
      s_.out << text;
      if (o_.timing) {
        s_.out << "time: " << std::chrono::duration<double, std::milli>(Clock::now() - start_).count()
               << " ms\n";
      }
    }
    return code;
  }

  // Every command except validate works on valid algebras only.
  bool require_valid(const DiasAlgebra& L) const {
    if (validate_axioms(L, 1).ok()) return true;
    s_.err << "error: input is not a diassociative algebra (see the validate command)\n";
    return false;
  }

 private:
  std::string command_;
  const Options& o_;
  Streams s_;
  Clock::time_point start_ = Clock::now();
};

Json subspace_json(const Subspace& s) {
  return Json{{"dim", s.dim()}, {"basis", matrix_to_json(s.basis())}};
}

std::string rows_text(const Subspace& s) {
  std::ostringstream os;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    os << "  [";
    for (std::size_t c = 0; c < s.ambient_dim(); ++c) os << (c ? ", " : "") << s.basis()(r, c);
    os << "]\n";
  }
  return os.str();
}

Json report_json(const SequenceReport& r) {
  Json nodes = Json::array();
  for (const auto& n : r.nodes) {
    nodes.push_back({{"name", n.name},
                     {"rows", n.map.rows()},
                     {"cols", n.map.cols()},
                     {"rank", n.rank},
                     {"kernel_dim", n.kernel_dim}});
  }
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back({{"at", v.at}, {"claim", v.claim}, {"holds", v.holds}});
  return Json{{"exact", r.exact()}, {"nodes", std::move(nodes)}, {"verdicts", std::move(verdicts)}};
}

std::string report_text(const std::string& title, const SequenceReport& r) {
  std::ostringstream os;
  os << title << "\n";
  for (const auto& n : r.nodes) {
    os << "  " << std::left << std::setw(16) << n.name << n.map.rows() << "x" << n.map.cols() << "  rank "
       << n.rank << "  ker " << n.kernel_dim << "\n";
  }
  for (const auto& v : r.verdicts) os << "  [" << (v.holds ? "ok" : "FAIL") << "] " << v.claim << "\n";
  return os.str();
}

Json theorem49_json(const Theorem49Report& r) {
  return Json{{"delta_zero", r.delta_zero},
              {"inf2_surjective", r.inf2_surjective},
              {"multiplier_identity", r.multiplier_identity},
              {"inside_z_star", r.inside_z_star},
              {"agree", r.agree()},
              {"multiplier_dim", r.multiplier_dim},
              {"quotient_multiplier_dim", r.quotient_multiplier_dim},
              {"derived_meet_dim", r.derived_meet_dim}};
}

std::string theorem49_text(const Theorem49Report& r) {
  auto yn = [](bool b) { return b ? "true" : "false"; };
  std::ostringstream os;
  os << "delta = 0:                       " << yn(r.delta_zero) << "\n"
     << "Inf2 surjective:                 " << yn(r.inf2_surjective) << "\n"
     << "dim M(L) = dim M(L/Z) - dim L'∩Z: " << yn(r.multiplier_identity) << "  (" << r.multiplier_dim
     << " vs " << r.quotient_multiplier_dim << " - " << r.derived_meet_dim << ")\n"
     << "Z inside Z*(L):                  " << yn(r.inside_z_star) << "\n"
     << "agree: " << yn(r.agree()) << "\n";
  return os.str();
}

Subspace central_ideal_or_throw(const DiasAlgebra& L, const std::string& spec) {
  Subspace H = parse_ideal(L, spec);
  if (!is_central_ideal(L, H)) throw UsageError("--ideal '" + spec + "' is not a central ideal");
  return H;
}

struct PairResult {
  Json json;
  std::string text;
  bool ok = true;
};

// Runs `work` on every (entry, central ideal) pair, entries spread over
// `jobs` threads; results keep corpus order.
template <typename Work>
std::vector<PairResult> sweep(const std::vector<CatalogEntry>& entries, unsigned jobs, Work work) {
  std::vector<std::vector<PairResult>> per_entry(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      for (std::size_t k = 0; k < entries[i].central_ideals.size(); ++k) {
        per_entry[i].push_back(work(entries[i], k));
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < std::max(1U, jobs); ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  std::vector<PairResult> out;
  for (auto& v : per_entry) {
    for (auto& r : v) out.push_back(std::move(r));
  }
  return out;
}

const char* ideal_name(std::size_t k) {
  static const char* names[] = {"zero", "center", "intermediate"};
  return names[k];
}

int corpus_sweep(const std::string& command, const Options& o, Streams s,
                 PairResult (*one)(const CatalogEntry&, std::size_t)) {
  Run run(command, o, s);
  const FieldSpec f = parse_field_name(o.field);
  const auto entries = corpus(f);
  auto results = sweep(entries, o.jobs, one);
  Json pairs = Json::array();
  std::string text;
  std::size_t failures = 0;
  for (auto& r : results) {
    failures += r.ok ? 0 : 1;
    pairs.push_back(std::move(r.json));
    text += r.text;
  }
  text += std::to_string(results.size()) + " pairs, " + std::to_string(failures) + " failures\n";
  Json res{{"field", f.name()}, {"pairs", results.size()}, {"failures", failures}, {"results", std::move(pairs)}};
  return run.emit(sha256_hex("corpus:" + f.name()), std::move(res), text, failures ? kExitViolated : kExitOk);
}

PairResult sequences_pair(const CatalogEntry& e, std::size_t k) {
  const Subspace& H = e.central_ideals[k];
  auto five = verify_five_term(e.algebra, H);
  auto stallings = verify_stallings(e.algebra, H);
  PairResult r;
  r.ok = five.exact() && stallings.exact();
  r.json = {{"id", e.id}, {"ideal", ideal_name(k)}, {"ideal_dim", H.dim()}, {"exact", r.ok}};
  r.text = (r.ok ? "[ok]   " : "[FAIL] ") + e.id + " / " + ideal_name(k) + "\n";
  return r;
}

PairResult thm49_pair(const CatalogEntry& e, std::size_t k) {
  const Subspace& Z = e.central_ideals[k];
  auto t = theorem49_report(e.algebra, Z);
  PairResult r;
  r.ok = t.agree();
  r.json = theorem49_json(t);
  r.json["id"] = e.id;
  r.json["ideal"] = ideal_name(k);
  const char* verdict = !r.ok ? "  conditions disagree\n" : t.delta_zero ? "  all true\n" : "  all false\n";
  r.text = (r.ok ? "[ok]   " : "[FAIL] ") + e.id + " / " + ideal_name(k) + verdict;
  return r;
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

FieldSpec parse_field_name(const std::string& name) {
  if (name == "Q" || name == "rational") return FieldSpec::rational();
  std::string digits = name;
  if (digits.rfind("GF(", 0) == 0 && digits.back() == ')') digits = digits.substr(3, digits.size() - 4);
  try {
    std::size_t used = 0;
    auto p = std::stoull(digits, &used);
    if (used != digits.size()) throw UsageError("bad field '" + name + "'");
    return FieldSpec::prime(p);
  } catch (const std::logic_error&) {
    throw UsageError("bad field '" + name + "' (use Q, 7 or GF(7))");
  } catch (const InvalidField& e) {
    throw UsageError(e.what());
  }
}

Subspace parse_ideal(const DiasAlgebra& L, const std::string& spec) {
  const FieldSpec& f = L.field();
  if (spec == "zero") return Subspace::zero(f, L.dim());
  if (spec == "center") return center(L);
  if (spec == "derived") return derived_subalgebra(L);
  std::vector<Vector> rows;
  std::stringstream all(spec);
  std::string row;
  while (std::getline(all, row, ';')) {
    Vector v;
    std::stringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        v.push_back(Scalar::parse(f, cell));
      } catch (const ArithmeticError& e) {
        throw UsageError(std::string("--ideal: ") + e.what());
      }
    }
    if (v.size() != L.dim()) throw UsageError("--ideal rows need " + std::to_string(L.dim()) + " entries");
    rows.push_back(std::move(v));
  }
  if (rows.empty()) throw UsageError("--ideal is empty");
  Subspace H = Subspace::span(f, L.dim(), rows);
  if (!is_ideal(L, H)) throw UsageError("--ideal rows do not span an ideal");
  return H;
}

int cmd_validate(const std::string& path, const Options& o, Streams s) {
  Run run("validate", o, s);
  auto in = load(path);
  const auto report = validate_axioms(in.file.algebra);
  Json counts = Json::object();
  Json witnesses = Json::array();
  std::ostringstream text;
  for (Axiom a : kAxioms) {
    counts[axiom_name(a)] = report.count(a);
    text << "  " << std::left << std::setw(18) << axiom_name(a) << std::setw(34) << axiom_identity(a)
         << (report.count(a) ? std::to_string(report.count(a)) + " violations" : "ok") << "\n";
  }
  const std::size_t shown = std::min<std::size_t>(report.violations.size(), 20);
  for (std::size_t w = 0; w < shown; ++w) {
    const auto& v = report.violations[w];
    witnesses.push_back({{"axiom", axiom_name(v.axiom)},
                         {"triple", {v.i, v.j, v.k}},
                         {"residual", vector_to_json(v.residual)}});
    text << "  witness " << axiom_name(v.axiom) << " at (" << v.i << ", " << v.j << ", " << v.k << ")\n";
  }
  text << (report.ok() ? "valid\n" : "invalid\n");
  Json res{{"valid", report.ok()},
           {"dim", in.file.algebra.dim()},
           {"field", in.file.algebra.field().name()},
           {"violations", report.violations.size()},
           {"per_axiom", std::move(counts)},
           {"witnesses", std::move(witnesses)}};
  return run.emit(in.digest, std::move(res), text.str(), report.ok() ? kExitOk : kExitInvalid);
}

int cmd_info(const std::string& path, const Options& o, Streams s) {
  Run run("info", o, s);
  auto in = load(path);
  const DiasAlgebra& L = in.file.algebra;
  if (!run.require_valid(L)) return kExitInvalid;
  const std::size_t n = L.dim();
  const std::size_t d = derived_subalgebra(L).dim();
  const std::size_t z = center(L).dim();
  const std::size_t bound = 2 * (n - z) * (n - z);
  const bool holds = d <= bound;
  std::ostringstream text;
  text << "field: " << L.field().name() << "\ndim L: " << n << "\ndim L': " << d << "\ndim Z(L): " << z
       << "\ndim L' <= 2(dim L - dim Z)^2 = " << bound << ": " << (holds ? "holds" : "VIOLATED") << "\n";
  Json res{{"name", in.file.name}, {"field", L.field().name()}, {"dim", n},
           {"derived_dim", d},     {"center_dim", z},           {"derived_bound", bound},
           {"bound_holds", holds}};
  return run.emit(in.digest, std::move(res), text.str(), holds ? kExitOk : kExitViolated);
}

int cmd_multiplier(const std::string& path, const Options& o, Streams s) {
  Run run("multiplier", o, s);
  auto in = load(path);
  const DiasAlgebra& L = in.file.algebra;
  if (!run.require_valid(L)) return kExitInvalid;
  const auto m = multiplier(L);
  std::ostringstream text;
  text << "dim Z2: " << m.space.cocycles().dim() << "\ndim B2: " << m.space.coboundaries().dim()
       << "\ndim M(L) = dim H2(L, F): " << m.dim << "\n";
  Json res{{"multiplier_dim", m.dim},
           {"cocycle_dim", m.space.cocycles().dim()},
           {"coboundary_dim", m.space.coboundaries().dim()}};
  return run.emit(in.digest, std::move(res), text.str(), kExitOk);
}

int cmd_cover(const std::string& path, const std::string& out_path, const Options& o, Streams s) {
  Run run("cover", o, s);
  auto in = load(path);
  const DiasAlgebra& L = in.file.algebra;
  if (!run.require_valid(L)) return kExitInvalid;
  const Cover c = construct_cover(L);
  AlgebraFile out{in.file.name.empty() ? "cover" : in.file.name + "_cover", c.extension.total};
  const std::string bytes = serialize(out);
  if (!out_path.empty()) write_algebra_file(out_path, out);
  const auto& r = c.report;
  std::ostringstream text;
  text << "dim M(L): " << c.multiplier_dim << "\ndim K: " << r.total_dim << " (bound " << r.bound << ")\n"
       << "K/M = L: " << r.quotient_matches << "\nM in Z(K): " << r.kernel_central
       << "\nM in K': " << r.kernel_in_derived << "\nkernel: coordinates 0.." << c.multiplier_dim
       << " of K; projection K -> L drops them\n";
  if (!out_path.empty()) text << "written: " << out_path << "\n";
  Json res{{"multiplier_dim", c.multiplier_dim},
           {"cover_dim", r.total_dim},
           {"bound", r.bound},
           {"report",
            {{"quotient_matches", r.quotient_matches},
             {"kernel_central", r.kernel_central},
             {"kernel_in_derived", r.kernel_in_derived},
             {"within_bound", r.within_bound}}},
           {"kernel", subspace_json(c.extension.kernel)},
           {"projection", matrix_to_json(c.extension.projection)},
           {"output", out_path},
           {"output_sha256", sha256_hex(bytes)}};
  return run.emit(in.digest, std::move(res), text.str(), r.ok() ? kExitOk : kExitViolated);
}

int cmd_zstar(const std::string& path, const Options& o, Streams s) {
  Run run("zstar", o, s);
  auto in = load(path);
  const DiasAlgebra& L = in.file.algebra;
  if (!run.require_valid(L)) return kExitInvalid;
  const Subspace zs = z_star(L);
  const Subspace z = center(L);
  std::ostringstream text;
  text << "dim Z*(L): " << zs.dim() << "  (dim Z(L): " << z.dim() << ")\n" << rows_text(zs);
  Json res{{"z_star", subspace_json(zs)}, {"center_dim", z.dim()}, {"inside_center", subspace_contains(z, zs)}};
  return run.emit(in.digest, std::move(res), text.str(), kExitOk);
}

int cmd_unicentral(const std::string& path, const Options& o, Streams s) {
  Run run("unicentral", o, s);
  auto in = load(path);
  const DiasAlgebra& L = in.file.algebra;
  if (!run.require_valid(L)) return kExitInvalid;
  const Subspace zs = z_star(L);
  const Subspace z = center(L);
  const bool uni = zs == z;
  std::ostringstream text;
  text << "unicentral: " << (uni ? "yes" : "no") << "  (dim Z*(L) = " << zs.dim() << ", dim Z(L) = " << z.dim()
       << ")\n";
  Json res{{"unicentral", uni}, {"z_star_dim", zs.dim()}, {"center_dim", z.dim()}};
  return run.emit(in.digest, std::move(res), text.str(), o.assert_property && !uni ? kExitViolated : kExitOk);
}

int cmd_sequences(const std::string& path, const Options& o, Streams s) {
  if (o.corpus) return corpus_sweep("sequences", o, s, sequences_pair);
  Run run("sequences", o, s);
  auto in = load(path);
  const DiasAlgebra& L = in.file.algebra;
  if (!run.require_valid(L)) return kExitInvalid;
  const Subspace H = central_ideal_or_throw(L, o.ideal);
  const auto five = verify_five_term(L, H);
  const auto stallings = verify_stallings(L, H);
  const bool exact = five.exact() && stallings.exact();
  std::string text = "ideal: " + o.ideal + " (dim " + std::to_string(H.dim()) + ")\n" +
                     report_text("five-term sequence", five) + report_text("Stallings sequence", stallings) +
                     "exact: " + (exact ? "yes" : "no") + "\n";
  Json res{{"ideal", subspace_json(H)},
           {"five_term", report_json(five)},
           {"stallings", report_json(stallings)},
           {"exact", exact}};
  return run.emit(in.digest, std::move(res), text, exact ? kExitOk : kExitViolated);
}

int cmd_thm49(const std::string& path, const Options& o, Streams s) {
  if (o.corpus) return corpus_sweep("thm49", o, s, thm49_pair);
  Run run("thm49", o, s);
  auto in = load(path);
  const DiasAlgebra& L = in.file.algebra;
  if (!run.require_valid(L)) return kExitInvalid;
  const Subspace Z = central_ideal_or_throw(L, o.ideal);
  const auto r = theorem49_report(L, Z);
  Json res = theorem49_json(r);
  res["ideal"] = subspace_json(Z);
  return run.emit(in.digest, std::move(res), theorem49_text(r), r.agree() ? kExitOk : kExitViolated);
}

int cmd_catalog_list(const Options& o, Streams s) {
  Run run("catalog list", o, s);
  const FieldSpec f = parse_field_name(o.field);
  Json list = Json::array();
  std::ostringstream text;
  for (const auto& e : corpus(f)) {
    Json known = Json::object();
    auto put = [&](const char* key, const std::optional<KnownValue>& v) {
      if (v) known[key] = {{"value", v->value}, {"source", source_name(v->source)}};
    };
    put("derived_dim", e.known.derived_dim);
    put("center_dim", e.known.center_dim);
    put("multiplier_dim", e.known.multiplier_dim);
    list.push_back({{"id", e.id},
                    {"dim", e.algebra.dim()},
                    {"central_ideals", e.central_ideals.size()},
                    {"known", std::move(known)}});
    text << std::left << std::setw(32) << e.id << "dim " << e.algebra.dim() << "\n";
  }
  return run.emit(sha256_hex("corpus:" + f.name()), Json{{"field", f.name()}, {"entries", std::move(list)}},
                  text.str(), kExitOk);
}

int cmd_catalog_emit(const std::string& id, const std::string& out_path, const Options& o, Streams s) {
  Run run("catalog emit", o, s);
  const FieldSpec f = parse_field_name(o.field);
  auto entry = find_entry(corpus(f), id);
  if (!entry) throw UsageError("no catalog entry '" + id + "'");
  AlgebraFile file{id, entry->algebra};
  const std::string bytes = serialize(file);
  write_algebra_file(out_path, file);
  Json res{{"id", id}, {"dim", entry->algebra.dim()}, {"output", out_path}, {"output_sha256", sha256_hex(bytes)}};
  return run.emit(sha256_hex("corpus:" + f.name()), std::move(res),
                  "written: " + out_path + " (dim " + std::to_string(entry->algebra.dim()) + ")\n", kExitOk);
}

}  // namespace dias::cli
