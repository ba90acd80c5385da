#include <iostream>
#include <string>
#include <vector>

#include "brooks/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = brooks::cli::run(args, std::cin, std::cout, std::cerr);
    return brooks::cli::exit_code(result.status);
}
