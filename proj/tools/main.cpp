#include <iostream>

#include "ancestry/cli.hpp"

int main(int argc, char** argv) { return ancestry::run_cli(argc, argv, std::cout, std::cerr); }
