#include "capgeo/cli.hpp"

int main(int argc, char** argv) { return capgeo::cli::run(argc, argv); }
