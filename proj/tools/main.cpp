#include "heckecell/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return heckecell::run_cli(argc, argv, std::cout, std::cerr); }
