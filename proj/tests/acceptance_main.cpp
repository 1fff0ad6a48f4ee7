#include <iostream>

#include "acceptance.hpp"

int main() {
  bool all = true;
  nil7::acceptance::run_all({}, [&](const nil7::acceptance::Result& r) {
    std::cout << nil7::acceptance::format(r) << std::endl;
    all = all && r.pass;
  });
  return all ? 0 : 1;
}
