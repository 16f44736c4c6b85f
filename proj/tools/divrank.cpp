#include <iostream>

#include "divrank/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return divrank::cli::run(args, std::cout, std::cerr);
}
