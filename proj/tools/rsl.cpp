#include "rsl/cli.hpp"

int main(int argc, char** argv) { return rsl::cli::run_cli(argc, argv); }
