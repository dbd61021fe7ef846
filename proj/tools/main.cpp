#include <iostream>

#include "knotchar/cli.hpp"

int main(int argc, char** argv) { return knotchar::cli_main(argc, argv, std::cout, std::cerr); }
