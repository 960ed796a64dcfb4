#include <iostream>
#include <string>
#include <vector>

// Thin wrapper; all command handling lives in the library so tests can drive
// it in-process.
#include <majiq/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return majiq::run_command(args, std::cout, std::cerr);
}
