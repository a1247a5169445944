#include <iostream>

#include "orbifrob/cli.hpp"

int main(int argc, char** argv) { return orbifrob::cli::run(argc, argv, std::cout, std::cerr); }
