#include "hlk/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return hlk::cli::main(argc, argv, std::cin, std::cout, std::cerr);
}
