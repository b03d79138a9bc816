#include "twistr/cli.hpp"

int main(int argc, char** argv) { return twistr::run_cli(argc, argv); }
