#include <iostream>

#include "schurhr/cli.hpp"

int main(int argc, char** argv) { return schurhr::run_cli(argc, argv, std::cout, std::cerr); }
