#include <iostream>

#include "markov/cli.hpp"

int main(int argc, char** argv) { return markov::cli_main(argc, argv, std::cout, std::cerr); }
