#include <iostream>

#include "lattisym/cli.hpp"

int main(int argc, char** argv) { return lattisym::cli::run(argc, argv, std::cout, std::cerr); }
