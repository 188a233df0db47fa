#include <iostream>

#include "psisum/group.hpp"

int main() {
  const auto g = psisum::build_group(psisum::parse_group_spec("Q8"));
  std::cout << psisum::psi(g) << '\n';
  return psisum::psi(g) == 27 ? 0 : 1;
}
