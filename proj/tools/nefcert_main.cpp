#include "nefcert/cli.hpp"

int main(int argc, char** argv) { return nefcert::run(argc, argv); }
