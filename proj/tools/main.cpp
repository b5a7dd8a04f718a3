#include "cli/commands.hpp"

int main(int argc, char** argv) { return wigflow::cli::run(argc, argv); }
