#include "mukai/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return mukai::cli::run(argc, argv, std::cout, std::cerr); }
