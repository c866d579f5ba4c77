#include <iostream>
#include <string>
#include <vector>

#include "minorforge/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return minorforge::run_cli(args, std::cout, std::cerr);
}
