#include "conecurve/cli.hpp"

int main(int argc, char** argv) { return conecurve::cli::run(argc, argv); }
