#include "cpx/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return cpx::main_entry(argc, argv, std::cout, std::cerr); }
