#include <iostream>

#include "aristotle/cli.hpp"

int main(int argc, char** argv) { return aristotle::cli::run(argc, argv, std::cout, std::cerr); }
