#include <iostream>

#include "z4forms/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return z4::cli::run(args, std::cout, std::cerr);
}
