#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "dias/errors.hpp"

using namespace dias::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact multipliers, covers and low-degree sequences of diassociative algebras", "dias"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Options o;
  std::string file;
  std::string out;
  std::string id;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Emit a JSON report envelope");
    sub->add_flag("--timing", o.timing, "Include wall-clock time (not byte-stable)");
  };
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "Algebra file (JSON)")->required()->check(CLI::ExistingFile);
    add_common(sub);
  };

  auto* validate = app.add_subcommand("validate", "Check the five diassociative identities");
  add_file(validate);
  auto* info = app.add_subcommand("info", "Dimensions of L, L' and Z(L)");
  add_file(info);
  auto* mult = app.add_subcommand("multiplier", "dim M(L) via H2(L, F)");
  add_file(mult);
  auto* cover = app.add_subcommand("cover", "Construct and certify a cover");
  add_file(cover);
  cover->add_option("-o,--out", out, "Write the cover as an algebra file");
  auto* zstar = app.add_subcommand("zstar", "Z*(L), the image of the cover's center");
  add_file(zstar);
  auto* uni = app.add_subcommand("unicentral", "Whether Z*(L) = Z(L)");
  add_file(uni);
  uni->add_flag("--assert", o.assert_property, "Exit 1 when L is not unicentral");

  for (auto* sub : {app.add_subcommand("sequences", "Five-term and Stallings exactness report"),
                    app.add_subcommand("thm49", "The four equivalent conditions for a central ideal")}) {
    sub->add_option("file", file, "Algebra file (JSON)")->check(CLI::ExistingFile);
    sub->add_option("--ideal", o.ideal, "center | derived | zero | rows like \"1,0;0,1\"")
        ->capture_default_str();
    sub->add_flag("--corpus", o.corpus, "Sweep every catalog pair instead of a file");
    sub->add_option("--field", o.field, "Corpus field: Q or a prime")->capture_default_str();
    sub->add_option("--jobs", o.jobs, "Worker threads for --corpus")->check(CLI::PositiveNumber);
    add_common(sub);
  }

  auto* catalog = app.add_subcommand("catalog", "Built-in algebras");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List corpus entries");
  list->add_option("--field", o.field, "Q or a prime")->capture_default_str();
  add_common(list);
  auto* emit = catalog->add_subcommand("emit", "Write one entry as an algebra file");
  emit->add_option("id", id, "Entry id")->required();
  emit->add_option("out", out, "Output path")->required();
  emit->add_option("--field", o.field, "Q or a prime")->capture_default_str();
  add_common(emit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  Streams s{std::cout, std::cerr};
  try {
    for (auto* sub : app.get_subcommands()) {
      const std::string name = sub->get_name();
      if (name == "sequences" || name == "thm49") {
        if (!o.corpus && file.empty()) throw UsageError(name + ": give a file or --corpus");
      }
      if (name == "validate") return cmd_validate(file, o, s);
      if (name == "info") return cmd_info(file, o, s);
      if (name == "multiplier") return cmd_multiplier(file, o, s);
      if (name == "cover") return cmd_cover(file, out, o, s);
      if (name == "zstar") return cmd_zstar(file, o, s);
      if (name == "unicentral") return cmd_unicentral(file, o, s);
      if (name == "sequences") return cmd_sequences(file, o, s);
      if (name == "thm49") return cmd_thm49(file, o, s);
      if (name == "catalog") {
        if (list->parsed()) return cmd_catalog_list(o, s);
        return cmd_catalog_emit(id, out, o, s);
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const dias::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}
