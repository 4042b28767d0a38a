#include "tanlaw/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tanlaw::cli::run(argc, argv, std::cout, std::cerr); }
