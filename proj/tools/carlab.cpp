#include <iostream>
#include <string>
#include <vector>

#include "carlab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return carlab::run_cli(args, std::cout, std::cerr);
}
