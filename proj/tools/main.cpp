#include "toric/cli.hpp"

int main(int argc, char** argv) { return toric::cli::main_entry(argc, argv); }
