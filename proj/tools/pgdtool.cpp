#include "pgd/cli.hpp"

int main(int argc, char** argv) { return pgd::cli::run(argc, argv); }
