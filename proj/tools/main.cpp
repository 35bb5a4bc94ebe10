#include <iostream>

#include "qprod/cli.hpp"

int main(int argc, char** argv) {
  return qprod::parse_and_dispatch(argc, argv, std::cout, std::cerr);
}
