#include <iostream>
#include <string>
#include <vector>

#include "redkron/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return redkron::cli::run(args, std::cout, std::cerr);
}
