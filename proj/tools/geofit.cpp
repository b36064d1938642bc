#include "cli_app.hpp"

int main(int argc, char** argv) { return geofit::cli::run(argc, argv); }
