#include "gwf/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return gwf::run_cli(argc, argv, std::cout, std::cerr); }
