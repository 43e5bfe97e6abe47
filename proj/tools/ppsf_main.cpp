#include "ppsf/cli.hpp"

int main(int argc, char** argv) { return ppsf::run_cli(argc, argv); }
