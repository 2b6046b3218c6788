#include <iostream>

#include "bachflow/cli.hpp"

int main(int argc, char** argv) { return bachflow::cli_main(argc, argv, std::cout, std::cerr); }
