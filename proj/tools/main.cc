#include <iostream>

#include "blowup/cli.h"

int main(int argc, char** argv) { return blowup::run_cli(argc, argv, std::cout, std::cerr); }
