#include <iostream>
#include <string>
#include <vector>

#include "graft/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return graft::run(args, std::cout, std::cerr);
}
