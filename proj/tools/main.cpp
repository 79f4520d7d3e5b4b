#include <iostream>

#include "tourney/cli.hpp"

int main(int argc, char** argv) { return tourney::cli_main(argc, argv, std::cout, std::cerr); }
