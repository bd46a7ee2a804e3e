#include <iostream>

#include "sparsetrace/cli.hpp"

int main(int argc, char** argv) { return sparsetrace::run_cli(argc, argv, std::cout, std::cerr); }
