#include "canonica/cli.hpp"

int main(int argc, char** argv) { return canonica::run(argc, argv); }
