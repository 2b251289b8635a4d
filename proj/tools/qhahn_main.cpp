#include "qhahn/cli.hpp"

int main(int argc, char** argv) { return qhahn::cli::run(argc, argv); }
