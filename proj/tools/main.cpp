#include <iostream>

#include "sofic/cli.hpp"

int main(int argc, char** argv) {
    return sofic::cli::dispatch(argc, argv, std::cout, std::cerr);
}
