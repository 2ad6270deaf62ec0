#include <iostream>
#include <string>
#include <vector>

#include "orderspec/cli/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return orderspec::cli::run_cli(args, std::cout, std::cerr, orderspec::cli::process_env());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
