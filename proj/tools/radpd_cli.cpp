#include "radpd/cli.hpp"

int main(int argc, char** argv) { return radpd::cli::main_entry(argc, argv); }
