#include "enlarge_cli/cli.hpp"

int main(int argc, char** argv) { return enlarge::cli::cli_main(argc, argv); }
