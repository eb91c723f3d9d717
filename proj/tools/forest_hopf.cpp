#include "forest_hopf/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return fhopf::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
