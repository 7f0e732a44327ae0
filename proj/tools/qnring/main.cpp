#include <iostream>

#include "qnring_cli/commands.hpp"

int main(int argc, char** argv) { return qnring::cli::run(argc, argv, std::cout, std::cerr); }
