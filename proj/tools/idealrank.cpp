#include <iostream>

#include "idealrank/cli.hpp"

int main(int argc, char** argv) {
    return idealrank::cli::run(argc, argv, std::cout, std::cerr);
}
