#include "cli/cli.hpp"

int main(int argc, char** argv) { return mpa::cli::run(argc, argv); }
