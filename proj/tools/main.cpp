#include <iostream>

#include "radix/cli.hpp"

int main(int argc, char** argv) { return radix::run_cli(argc, argv, std::cout, std::cerr); }
