#include <cstdlib>
#include <iostream>

#include "cli/cli.hpp"

int main(int argc, char** argv) {
  bstick::cli::Environment env;
  if (const char* seed = std::getenv("BSTICK_SEED")) env.seed = seed;
  return bstick::cli::run(argc, argv, std::cout, std::cerr, env);
}
