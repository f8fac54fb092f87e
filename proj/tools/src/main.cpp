#include <iostream>

#include "capdist/cli/commands.hpp"

int main(int argc, char** argv) { return capdist::cli::run(argc, argv, std::cout, std::cerr); }
