#include <iostream>

#include "vassiliev/cli_app.hpp"

int main(int argc, char** argv) {
  return vb::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
