#include "ale/cliapp.hpp"

int main(int argc, char** argv) { return ale::run_cli(argc, argv); }
