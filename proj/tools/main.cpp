#include "sbvr2ocl/cli.hpp"

int main(int argc, char** argv) { return sbvr2ocl::run_cli(argc, argv); }
