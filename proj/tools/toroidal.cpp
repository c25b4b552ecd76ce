#include <iostream>
#include <string>
#include <vector>

#include "toroidal/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return toroidal::cli::run(args, std::cin, std::cout, std::cerr);
}
