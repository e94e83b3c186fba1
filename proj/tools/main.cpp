#include <iostream>

#include "ivtrnn/cli.hpp"

int main(int argc, char** argv) {
    return ivtrnn::run(argc, argv, std::cout, std::cerr);
}
