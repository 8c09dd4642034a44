#include <iostream>

#include "monodraw/cli.hpp"

int main(int argc, char** argv) { return monodraw::cli::run(argc, argv, std::cout, std::cerr); }
