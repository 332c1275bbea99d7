#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const char* profile = std::getenv("LOGRES_TOLERANCE_PROFILE");
  return logres::cli::run(args, std::cout, std::cerr, profile ? profile : "");
}
