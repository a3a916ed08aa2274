#include <iostream>

#include "ajima/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ajima::run_cli(args, std::cout, std::cerr);
}
