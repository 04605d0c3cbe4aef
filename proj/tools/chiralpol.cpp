#include <iostream>

#include "chiralpol/cli.hpp"

int main(int argc, char** argv) { return chiralpol::run_cli(argc, argv, std::cout, std::cerr); }
