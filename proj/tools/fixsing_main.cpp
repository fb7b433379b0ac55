#include <iostream>

#include "fixsing/cli.hpp"

int main(int argc, char** argv)
{
    return fixsing::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
