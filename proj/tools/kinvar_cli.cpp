#include "kinvar/cli.hpp"

int main(int argc, char** argv) { return kinvar::run_cli(argc, argv); }
