#include "siq/report.hpp"

int main(int argc, char** argv) { return siq::report::cli_main(argc, argv); }
