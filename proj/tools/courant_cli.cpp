#include "courant/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return courant::cli::run(argc, argv, std::cout, std::cerr); }
