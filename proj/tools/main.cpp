#include <iostream>
#include <string>
#include <vector>

#include "pcf9_cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pcf9::cli::run(args, std::cout, std::cerr);
}
