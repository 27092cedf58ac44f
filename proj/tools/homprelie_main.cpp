/**
 * homprelie: exact cohomology, deformations and abelian extensions of
 * Hom-pre-Lie algebras given by rational structure constants.
 */

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "homprelie/cli.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    std::exit(2);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Full cohomology, deformations and abelian extensions of Hom-pre-Lie algebras"};
  app.require_subcommand(1);

  std::string input = "-";
  homprelie::CliOptions opt;
  std::size_t degree = 0, max_degree = 0, order = 0;

  for (std::size_t i = 0; i < homprelie::kCommandCount; ++i) {
    auto* sub = app.add_subcommand(homprelie::kCommandNames[i]);
    sub->add_option("input", input, "input document (JSON), '-' for stdin");
    sub->add_flag("--machine", opt.machine, "stable key=value output");
    sub->add_flag("--regular", opt.use_regular, "use the regular representation");
    sub->add_flag("--dump-matrix", opt.dump_matrix, "dump assembled matrices");
    sub->add_flag("--full", opt.full, "verify through order 3N");
    sub->add_option("--degree", degree, "cochain degree n");
    sub->add_option("--max-degree", max_degree, "compute degrees 1..N");
    sub->add_option("--order", order, "truncation order K");
  }

  CLI11_PARSE(app, argc, argv);

  auto* sub = app.get_subcommands().front();
  if (sub->count("--degree")) opt.degree = degree;
  if (sub->count("--max-degree")) opt.max_degree = max_degree;
  if (sub->count("--order")) opt.order = order;

  auto result = homprelie::run_command(sub->get_name(), opt, read_input(input));
  std::cout << result.output;
  return result.exit_code;
}
