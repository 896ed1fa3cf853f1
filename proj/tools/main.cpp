#include <string>
#include <vector>

#include "trinomial/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return trinomial::run_cli(args);
}
