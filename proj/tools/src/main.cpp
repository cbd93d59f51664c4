#include "cli.hpp"

int main(int argc, char** argv) { return dunklkg::cli::run(argc, argv); }
