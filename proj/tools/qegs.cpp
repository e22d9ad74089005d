#include "qegs/app/cli.hpp"

int main(int argc, char** argv) { return qegs::app::run(argc, argv); }
