#include "cli.hh"

#include <iostream>

int
main(int argc, char **argv) {
    std::vector<std::string> args(argv, argv + argc);
    return rnastruct::cli::run(args, std::cout, std::cerr);
}
