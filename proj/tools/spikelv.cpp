#include "spikelv/cli.hpp"

int main(int argc, char** argv) { return spikelv::cli::run(argc, argv); }
