#include <cstdint>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "dict2d/core.hpp"
#include "dict2d/script.hpp"

namespace {

dict2d::Engine parse_engine(const std::string& name) {
  if (name == "linear") return dict2d::Engine::kLinear;
  if (name == "blocked") return dict2d::Engine::kBlocked;
  if (name == "grouped") return dict2d::Engine::kGrouped;
  return dict2d::Engine::kAuto;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynamic 2D dictionary matching over byte matrices"};
  app.require_subcommand(1);

  std::string script_path;
  std::string engine_name = "auto";
  CLI::App* run = app.add_subcommand("run", "execute a command script");
  run->add_option("script", script_path, "script file")->required();
  run->add_option("--engine", engine_name, "auto|linear|blocked|grouped")
      ->check(CLI::IsMember({"auto", "linear", "blocked", "grouped"}));

  int rows = 8, cols = 8;
  std::uint64_t seed = 1;
  std::string alphabet = "ab";
  CLI::App* gen = app.add_subcommand("gen", "emit a random matrix");
  gen->add_option("rows", rows, "matrix height")->required();
  gen->add_option("cols", cols, "matrix width")->required();
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--alphabet", alphabet, "bytes to draw from");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed())
    return dict2d::run_script(script_path, parse_engine(engine_name),
                              std::cout, std::cerr);

  if (rows < 1 || cols < 1 || alphabet.empty()) {
    std::cerr << "error: rows, cols and alphabet must be non-empty\n";
    return 2;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  dict2d::TextGrid grid;
  grid.rows.assign(static_cast<std::size_t>(rows), std::string());
  for (std::string& r : grid.rows) {
    r.resize(static_cast<std::size_t>(cols));
    for (char& c : r) c = alphabet[pick(rng)];
  }
  std::cout << dict2d::serialize_matrix(grid);
  return 0;
}
