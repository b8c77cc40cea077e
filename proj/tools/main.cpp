#include <vdw/cli.hpp>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return vdw::cli::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
