#include <iostream>

#include "cli_app.hpp"

int main(int argc, char** argv) { return lerchint::cli::run_cli(argc, argv, std::cout); }
