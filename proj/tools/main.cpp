#include <iostream>

#include "sdikit/cli.hpp"

int main(int argc, char** argv) { return sdikit::cli::run(argc, argv, std::cout, std::cerr); }
