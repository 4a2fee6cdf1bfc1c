#include "singular/cli.hpp"

int main(int argc, char** argv) { return singular::run_cli_main(argc, argv); }
