#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) { return fsst::cli::run(argc, argv, std::cerr); }
