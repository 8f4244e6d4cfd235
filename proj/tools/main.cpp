#include <iostream>

#include "topstruct/cli.hpp"

int main(int argc, char** argv)
{
    return topstruct::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
