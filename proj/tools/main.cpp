#include "nestedrisk/cli.hpp"

int main(int argc, char** argv) { return nestedrisk::cli::run(argc, argv); }
