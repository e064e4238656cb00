// Regenerates the bundled b-file fixtures (200 terms each) from the
// exact oracles. Usage: gen-fixtures <output-dir>

#include <fstream>
#include <iostream>

#include "fareylcm/numtheory.hpp"

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "data";
  {
    std::ofstream out(dir + "/b003418.txt", std::ios::trunc);
    for (std::int64_t n = 0; n < 200; ++n) {
      out << n << " " << fareylcm::numtheory::lcm_upto(n).get_str() << "\n";
    }
  }
  {
    std::ofstream out(dir + "/b048671.txt", std::ios::trunc);
    for (std::int64_t n = 1; n <= 200; ++n) {
      out << n << " " << fareylcm::numtheory::lcm_bar(n).get_str() << "\n";
    }
  }
  std::cout << "wrote " << dir << "/b003418.txt and " << dir << "/b048671.txt\n";
  return 0;
}
