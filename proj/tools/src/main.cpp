#include <iostream>

#include "coxflip_app/cli.hpp"

int main(int argc, char** argv) { return coxflip::app::cli_main(argc, argv, std::cout, std::cerr); }
