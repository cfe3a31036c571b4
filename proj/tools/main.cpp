#include "falsevac/cli.hpp"

int main(int argc, char** argv) { return falsevac::cli::main(argc, argv); }
