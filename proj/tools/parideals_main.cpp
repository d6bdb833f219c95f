#include "parideals/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return parideals::main_entry(argc, argv, std::cout, std::cerr);
}
