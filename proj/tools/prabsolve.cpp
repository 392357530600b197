#include <iostream>

#include "prab/cli/app.hpp"

int main(int argc, char** argv) { return prab::cli::run(argc, argv, std::cout, std::cerr); }
