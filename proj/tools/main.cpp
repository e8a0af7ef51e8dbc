#include "commnorm/cli.hpp"

int main(int argc, char** argv) { return commnorm::cli::run(argc, argv); }
