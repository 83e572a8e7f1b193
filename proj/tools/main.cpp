#include <iostream>
#include <string>
#include <vector>

#include "dlsim/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dlsim::run_cli(args, std::cout, std::cerr);
}
