#include <iostream>
#include <vector>

#include "cyclotome/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cyclotome::run_cli(args, std::cout, std::cerr);
}
