#include <iostream>

#include "ggslab/cli.hpp"

int main(int argc, char** argv) { return ggslab::run_cli(argc, argv, std::cout, std::cerr); }
