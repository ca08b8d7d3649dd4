#include <iostream>

#include "swf/verify.hpp"

int main() {
  int failed = 0;
  for (const auto& c : swf::verify::acceptance_criteria()) {
    std::cout << c.line() << '\n';
    if (!c.pass) ++failed;
  }
  std::cout << (11 - failed) << "/11 criteria passed\n";
  return failed == 0 ? 0 : 1;
}
