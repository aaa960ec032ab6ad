#include "lagsob/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return lagsob::cli::main_entry(argc, argv, std::cout, std::cerr); }
