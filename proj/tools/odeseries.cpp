#include <iostream>
#include "odes/cli.h"

int main(int argc, char** argv) {
    return odes::run_cli(argc, argv, std::cout, std::cerr);
}
