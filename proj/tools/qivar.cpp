#include "qivar/cli.hpp"

int main(int argc, char** argv) { return qivar::cli::run(argc, argv); }
