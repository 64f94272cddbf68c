#include "gradix/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return gradix::cli::run(argc, argv, std::cout, std::cerr);
}
