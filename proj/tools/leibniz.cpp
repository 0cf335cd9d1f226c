#include "leibniz/cli.hpp"

int main(int argc, char** argv) { return leibniz::cli::dispatch(argc, argv); }
