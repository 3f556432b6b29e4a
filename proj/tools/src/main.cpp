#include <iostream>

#include "extropy_cli/app.hpp"

int main(int argc, char** argv) { return extropy::cli::run(argc, argv, std::cout, std::cerr); }
