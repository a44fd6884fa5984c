#include "umbral/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return umbral::run_cli(argc, argv, std::cout, std::cerr); }
