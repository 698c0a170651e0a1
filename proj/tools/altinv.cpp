#include <iostream>

#include <altinv/cli.hpp>

int main(int argc, char** argv) {
    return altinv::cli::main_entry(argc, argv, std::cout, std::cerr);
}
