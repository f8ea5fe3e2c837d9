#include "wronski/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return wronski::cli::run(argc, argv, std::cout, std::cerr); }
