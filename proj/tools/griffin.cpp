#include <iostream>

#include "griffin/cli.hpp"

int main(int argc, char** argv) {
    return griffin::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
