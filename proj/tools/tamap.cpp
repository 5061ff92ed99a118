#include <iostream>

#include "tamap/cli.hpp"

int main(int argc, char** argv) { return tamap::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
