#include "polyinv/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return polyinv::cli_main(argc, argv, std::cout, std::cerr); }
