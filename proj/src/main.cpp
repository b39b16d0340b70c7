#include <iostream>

#include "macdual/cli.hpp"

int main(int argc, char** argv) {
    return macdual::cli_main(argc, argv, std::cout, std::cerr);
}
