#include <iostream>
#include <string>
#include <vector>

#include "pancake_cli/commands.hpp"
#include "pancake_cli/config.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    const auto cfg = pancake::cli::parse_config(args);
    return pancake::cli::execute(cfg, std::cout, std::cerr);
  } catch (const pancake::cli::CliExit& e) {
    (e.code() == 0 ? std::cout : std::cerr) << e.what();
    return e.code();
  }
}
