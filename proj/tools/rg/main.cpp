#include "rg/commands.hpp"

int main(int argc, char** argv) { return rg::run(argc, argv); }
