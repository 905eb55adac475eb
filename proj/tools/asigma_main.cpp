#include "asigma/cli.hpp"

int main(int argc, char** argv) { return asigma::cli_main(argc, argv); }
