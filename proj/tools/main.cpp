#include "cli_app.hpp"

int main(int argc, char** argv) { return chordrig::cli::run_cli(argc, argv); }
