#include "dirac_lt/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return dirac_lt::cli::main_entry(argc, argv, std::cout, std::cerr); }
