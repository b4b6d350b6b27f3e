#include <iostream>
#include <vector>

#include "lforge/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lforge::run_cli(args, std::cout, std::cerr);
}
