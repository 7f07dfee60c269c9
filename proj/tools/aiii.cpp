#include <iostream>

#include "aiii/cli.hpp"

int main(int argc, char** argv) { return aiii::cli::run(argc, argv, std::cout, std::cerr); }
