#include <iostream>

#include "eqhom/cli.hpp"

int main(int argc, char** argv) { return eqhom::run_cli(argc, argv, std::cout, std::cerr); }
