#include <iostream>
#include <string>
#include <vector>

#include "z2k/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return z2k::cli::run(args, std::cout, std::cerr);
}
