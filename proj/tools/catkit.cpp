#include "catkit/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return catkit::run(argc, argv, std::cout, std::cerr); }
