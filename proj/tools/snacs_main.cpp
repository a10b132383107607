#include <iostream>
#include <string>
#include <vector>

#include "snacs/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return snacs::run(args, std::cout, std::cerr);
}
