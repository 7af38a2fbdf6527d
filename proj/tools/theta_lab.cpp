#include "thetalab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return thetalab::cli::run_cli(argc, argv, std::cout, std::cerr);
}
