#include <iostream>
#include <string>
#include <vector>

#include "leibniz/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return leibniz::run_command(args, std::cout, std::cerr);
}
