#include <iostream>

#include "catalan/cli.hpp"

int main(int argc, char** argv) {
  const auto res = catalan::run_cli({argv + 1, argv + argc});
  std::cout << res.out;
  std::cerr << res.err;
  return res.code;
}
