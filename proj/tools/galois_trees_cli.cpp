#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "galois_trees/galois_trees.hpp"

using namespace galois_trees;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInputError = 2 };

CoverSpec load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abelian Galois covers of multigraphs: Jacobians, twisted matroids, zeta functions"};
  app.require_subcommand(1);

  std::string file;
  std::string format = "json";
  std::string lengths_text;
  long character = -1;
  int max_length = 0;

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "cover spec (JSON)")->required();
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    return sub;
  };
  CLI::App* build = add("build", "construct the cover and check its invariants");
  CLI::App* jac = add("jacobian", "Jacobian groups of the base and the cover, pushforward");
  CLI::App* jacpoly = add("jacpoly", "Jacobian polynomial of the base and specialized polynomial of the cover");
  CLI::App* matroid = add("matroid", "twisted matroids, basis weights and weight polynomials");
  matroid->add_option("--character", character, "character index (default: all nontrivial)");
  CLI::App* zeta = add("zeta", "zeta function reciprocals of the base graph");
  zeta->add_option("--lengths", lengths_text, "edge lengths e=int,...");
  zeta->add_option("--max-length", max_length, "closed path census up to this length");
  CLI::App* lfun = add("lfunction", "L-function reciprocals of a free cover");
  lfun->add_option("--character", character, "character index (default: all)");
  lfun->add_option("--lengths", lengths_text, "edge lengths e=int,...");
  CLI::App* resolve = add("resolve", "free resolution of a dilated spec");
  CLI::App* verify = add("verify", "verify the factorization of the cover's Jacobian polynomial");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  std::optional<long> chosen;
  if (character >= 0) chosen = character;
  if (character < -1) {
    std::cerr << "error: character index must be nonnegative\n";
    return kInputError;
  }

  int status = kOk;
  json out;
  try {
    const CoverSpec spec = load(file);
    if (build->parsed()) {
      out = build_report(spec);
    } else if (jac->parsed()) {
      out = jacobian_report(spec);
    } else if (jacpoly->parsed()) {
      out = jacpoly_report(spec);
    } else if (matroid->parsed()) {
      out = matroid_report(spec, chosen);
    } else if (zeta->parsed()) {
      std::optional<int> census;
      if (max_length > 0) census = max_length;
      out = zeta_report(spec, parse_lengths(lengths_text), census);
    } else if (lfun->parsed()) {
      out = lfunction_report(spec, chosen, parse_lengths(lengths_text));
    } else if (resolve->parsed()) {
      out = resolve_report(spec);
    } else if (verify->parsed()) {
      auto report = verify_main_theorem(spec);
      out = verification_to_json(report);
      if (!report.equal || !report.counts_equal) status = kMismatch;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (format == "text") {
    std::cout << to_text(out);
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return status;
}
