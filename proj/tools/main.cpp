#include <iostream>
#include <string>
#include <vector>

#include "freefusion/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return freefusion::cli::run(args, std::cout, std::cerr);
}
