#include "cli_app.hpp"

int main(int argc, char** argv) { return zetafree::cli_main(argc, argv); }
