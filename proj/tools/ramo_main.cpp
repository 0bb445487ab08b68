#include "ramo/cli.hpp"

int main(int argc, char** argv) { return ramo::run_cli(argc, argv); }
