#include "lczmbt/cli.hpp"

int main(int argc, char** argv) { return lczmbt::cli::run(argc, argv); }
