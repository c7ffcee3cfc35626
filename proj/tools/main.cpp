#include "logcoef/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return logcoef::cli::run_cli(argc, argv, std::cout, std::cerr);
}
