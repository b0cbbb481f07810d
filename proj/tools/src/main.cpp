#include <pisot_tools/cli.hpp>

#include <iostream>

int main(int argc, char **argv) { return pisot::cli::run_cli(argc, argv, std::cout, std::cerr); }
