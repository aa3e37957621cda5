#include <iostream>

#include "levelstruct/cli.hpp"

int main(int argc, char** argv) {
  return levelstruct::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
