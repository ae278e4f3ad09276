#include <iostream>
#include <vector>

#include "satrees/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return satrees::run_cli(args, std::cout, std::cerr);
}
