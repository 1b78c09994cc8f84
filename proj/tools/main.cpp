#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return h2cost::cli::run(argc, argv, std::cout, std::cerr); }
