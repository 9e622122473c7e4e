#include "permlab/cli.hpp"

int main(int argc, char** argv) { return permlab::run_cli(argc, argv); }
