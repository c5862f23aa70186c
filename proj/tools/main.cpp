#include "curalg/cli/run.hpp"

int main(int argc, char** argv) { return curalg::cli::run(argc, argv); }
