#include <iostream>

#include "qcplane/cli.hpp"

int main(int argc, char** argv) { return qcplane::cli::run(argc, argv, std::cout, std::cerr); }
