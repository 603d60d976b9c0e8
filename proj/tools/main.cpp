#include "crgstir/cli.hpp"

int main(int argc, char** argv) { return crgstir::run(argc, argv); }
