#include <colemb/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return colemb::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
