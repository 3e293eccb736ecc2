#include <iostream>

#include "qlie/cli.hpp"

int main(int argc, char** argv) {
    return qlie::cli::run(argc, argv, std::cout, std::cerr);
}
