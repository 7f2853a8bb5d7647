#include <iostream>

#include "radonlike/cli/app.hpp"

int main(int argc, char** argv) { return radonlike::cli::run(argc, argv, std::cout, std::cerr); }
