#include <string>
#include <vector>

#include "leginet/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return leginet::run_cli(args);
}
