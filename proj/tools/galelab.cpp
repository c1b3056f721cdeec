#include <iostream>

#include "galelab/cli.hpp"

int main(int argc, char** argv) { return galelab::cli::run(argc, argv, std::cout, std::cerr); }
