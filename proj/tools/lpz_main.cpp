#include <iostream>

#include "lpz/cli.hpp"

int main(int argc, char** argv) { return lpz::cli_main(argc, argv, std::cout, std::cerr); }
