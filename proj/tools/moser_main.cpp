#include "moser/cli.hpp"

int main(int argc, char** argv) { return moser::run_cli(argc, argv); }
