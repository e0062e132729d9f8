#include <iostream>
#include <string>
#include <vector>

#include "lqbetti/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lqb::cli_main(args, std::cout, std::cerr);
}
