#include <iostream>
#include <string>
#include <vector>

#include "qbp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qbp::run_cli(args, std::cout, std::cerr);
}
