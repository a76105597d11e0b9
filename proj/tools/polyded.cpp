#include <iostream>

#include "polyded/cli.hpp"

int main(int argc, char** argv) { return polyded::cli::run(argc, argv, std::cout, std::cerr); }
