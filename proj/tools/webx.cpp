#include "webx/cli.hpp"

int main(int argc, char** argv) { return webx::cli::run(argc, argv); }
