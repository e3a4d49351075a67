#include "pareto/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return pareto::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
