#include <iostream>

#include "axial/cli.hpp"

int main(int argc, char** argv) { return axial::run_cli(argc, argv, std::cout, std::cerr); }
