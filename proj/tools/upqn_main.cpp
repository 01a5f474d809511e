#include <iostream>

#include "upqn/cli.hpp"

int main(int argc, char** argv) { return upqn::run_cli(argc, argv, std::cout, std::cerr); }
