#include <iostream>

#include "hermcodes/cli.hpp"

int main(int argc, char** argv) { return hermcodes::run_cli(argc, argv, std::cout, std::cerr); }
