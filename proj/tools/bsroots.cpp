#include <iostream>

#include "bsroots/cli.hpp"

int main(int argc, char** argv) { return bsroots::cli_main(argc, argv, std::cout, std::cerr); }
