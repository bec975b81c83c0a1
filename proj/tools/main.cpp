#include "idcp/cli.hpp"

int main(int argc, char** argv) { return idcp::cli_dispatch(argc, argv); }
