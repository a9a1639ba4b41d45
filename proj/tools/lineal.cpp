#include "lineal/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lineal::cli::run_command(args, std::cout, std::cerr);
}
