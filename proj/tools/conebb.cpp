#include "conebb/cli.hpp"

int main(int argc, char** argv) { return conebb::cli::main(argc, argv); }
