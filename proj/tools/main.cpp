#include "zetalog/cli.hpp"

int main(int argc, char** argv) { return zetalog::cli::run(argc, argv); }
