#include "cominq/cli.hpp"

int main(int argc, char** argv) { return cominq::cli::run_main(argc, argv); }
