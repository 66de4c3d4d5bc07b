#include <iostream>

#include "ksalg/cli.hpp"

int main(int argc, char** argv) { return ksalg::run_cli(argc, argv, std::cout, std::cerr); }
