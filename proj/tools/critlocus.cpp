#include "critlocus/cli.hpp"

int main(int argc, char** argv) { return critlocus::cli::main_entry(argc, argv); }
