#include <iostream>

#include "morsecat/cli.hpp"

int main(int argc, char** argv) { return morsecat::cli::run(argc, argv, std::cout, std::cerr); }
