#include "orthdet/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return orthdet::cli::run(argc, argv, std::cout, std::cerr); }
