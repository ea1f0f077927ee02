#include <iostream>

#include "cli/app.hpp"

int main(int argc, char** argv) {
    return solgeom::cli::main_entry(argc, argv, std::cout, std::cerr);
}
