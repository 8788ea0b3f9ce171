#include "isokit/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv)
{
    std::ios::sync_with_stdio(false);
    const std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> env_format;
    if (const char* v = std::getenv("ISOKIT_FORMAT")) env_format = v;
    return isokit::cli::run(args, std::cin, std::cout, std::cerr, env_format);
}
