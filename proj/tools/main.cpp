#include <iostream>

#include "lsb/cli.hpp"

int main(int argc, char** argv) { return lsb::run_cli(argc, argv, std::cout, std::cerr); }
