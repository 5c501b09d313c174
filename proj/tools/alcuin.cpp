#include <iostream>
#include <string>
#include <vector>

#include "alcuin_cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return alcuin::cli::run(std::move(args), std::cout, std::cerr);
}
