#include <iostream>

#include "bto/cli.hpp"

int main(int argc, char** argv) { return bto::cli::run(argc, argv, std::cout, std::cerr); }
