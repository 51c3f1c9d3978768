#include <hankelkit/cli.hpp>

int main(int argc, char** argv) { return hankelkit::cli::main(argc, argv); }
