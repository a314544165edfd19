#include <iostream>

#include "burn/cli.hpp"

int main(int argc, char** argv) { return burn::cli::run(argc, argv, std::cout, std::cerr); }
