// Single translation unit for the amalgamated Catch2 distribution.
#include <catch2/catch_amalgamated.cpp>
