#include <iostream>
#include <string>
#include <vector>

#include "fanram/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fanram::cli::run(args, std::cout, std::cerr);
}
