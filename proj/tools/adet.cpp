#include <iostream>
#include <string>
#include <vector>

#include "adet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const adet::CliOutcome res = adet::run(args);
  std::cout << res.out;
  return res.exit_code;
}
