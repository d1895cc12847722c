#include "orbiheat/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return orbiheat::cli::run(argc, argv, std::cout, std::cerr);
}
