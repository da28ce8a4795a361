#include "cactusmp/cli.hpp"

int main(int argc, char** argv) { return cactusmp::run_cli(argc, argv); }
