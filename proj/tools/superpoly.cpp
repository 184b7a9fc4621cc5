#include "superpoly/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return superpoly::cli::run_cli(args);
}
