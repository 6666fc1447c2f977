#include <iostream>

#include "rrq/cli.hpp"

int main(int argc, char** argv)
{
    return rrq::cli::run(argc, argv, std::cout, std::cerr);
}
