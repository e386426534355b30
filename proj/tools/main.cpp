#include "dra/cli/cli.hpp"

int main(int argc, char** argv) { return dra::cli::main_entry(argc, argv); }
