#include "lietower/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lietower/catalog.hpp"
#include "lietower/document.hpp"
#include "lietower/errors.hpp"

namespace lietower {

namespace {

LieAlgebra load_input(const std::string& spec) {
  const std::string prefix = "catalog:";
  if (spec.compare(0, prefix.size(), prefix) == 0) return catalog(spec.substr(prefix.size()));
  std::ostringstream text;
  if (spec == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(spec);
    if (!in) throw InputError("cannot read '" + spec + "'");
    text << in.rdbuf();
  }
  return parse_algebra(text.str());
}

FastPath parse_fast_path(const std::string& s) {
  if (s == "on") return FastPath::on;
  if (s == "off") return FastPath::off;
  return FastPath::automatic;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact structure theory and derivation towers of Lie algebras over Q", "lietower"};
  app.set_version_flag("--version", LIETOWER_VERSION);
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  std::string input;
  const char* input_help = "Algebra document path, '-' for stdin, or catalog:NAME";

  auto* analyze = app.add_subcommand("analyze", "Flags, series, radicals, Levi part and Gamma-triple");
  analyze->add_option("input", input, input_help)->required();

  bool as_algebra = false;
  auto* der = app.add_subcommand("der", "Derivation algebra");
  der->add_option("input", input, input_help)->required();
  der->add_flag("--as-algebra", as_algebra, "Emit Der g as an algebra document");

  std::size_t max_steps = 16;
  std::string fast_path = "auto";
  auto* tower = app.add_subcommand("tower", "Derivation tower and its classification");
  tower->add_option("input", input, input_help)->required();
  tower->add_option("--max-steps", max_steps, "Maximum number of tower steps")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  tower->add_option("--fast-path", fast_path, "Normalizer-chain fast path")
      ->check(CLI::IsMember({"auto", "on", "off"}));

  auto* hull = app.add_subcommand("hull", "Complete hull s + B + m");
  hull->add_option("input", input, input_help)->required();

  for (auto* sub : {analyze, der, tower, hull}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const LieAlgebra g = load_input(input);
    Json doc;
    if (analyze->parsed()) {
      const PhiData data = phi_data(g);
      doc = make_report(g, analysis_json(g), gamma_triple_json(g, data), nullptr, nullptr);
    } else if (der->parsed()) {
      const DerivationSpace d = derivation_space(g);
      doc = as_algebra ? algebra_to_json(d.as_algebra)
                       : make_report(g, nullptr, nullptr, derivations_json(g, d), nullptr);
    } else if (tower->parsed()) {
      const TowerReport report = tower_iterate(g, max_steps, parse_fast_path(fast_path));
      doc = make_report(g, nullptr, nullptr, nullptr, tower_json(report));
    } else {
      const Hull h = complete_hull(g, phi_data(g));
      doc = make_report(g, nullptr, nullptr, Json{{"hull", hull_json(h)}}, nullptr);
    }
    out << (format == "text" ? render_text(doc) : doc.dump(2) + "\n");
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace lietower
