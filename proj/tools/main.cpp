#include <iostream>

#include "polyneck/cli.hpp"

int main(int argc, char** argv) { return polyneck::run_cli(argc, argv, std::cout, std::cerr); }
