#include "cubeknot/cli.hpp"

int main(int argc, char** argv) { return cubeknot::cli::run(argc, argv); }
