#include "facecount/cli.hpp"

int main(int argc, char** argv) { return facecount::run_cli(argc, argv); }
