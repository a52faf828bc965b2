#include <iostream>

#include "factcat/cli.hpp"

int main(int argc, char** argv) {
    return factcat::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
