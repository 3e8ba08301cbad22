// Walks through 1/12(1,7): continued fractions, invariant ring, special modules, the
// reconstruction quiver and one certified deformed arrow label.

#include <iostream>

#include "rca/rca.hpp"

int main() {
  const long r = 12, a = 7;

  std::cout << "12/7 = " << rca::format_entries(rca::hj_expand(r, a).entries)
            << ", 12/5 = " << rca::format_entries(rca::hj_dual(r, a).entries)
            << ", versal dimension " << rca::versal_dimension(r, a) << "\n\n";

  std::cout << rca::to_text(rca::ring_presentation(r, a)) << "\n";

  for (const auto& c : rca::module_classes(r, a)) {
    std::cout << "M" << c.class_id << " = " << rca::to_string(c.normalized) << "\n";
  }
  std::cout << "\n";

  const auto Q = rca::reconstruction_quiver(r, a, std::nullopt, 12);
  std::cout << rca::to_text(Q) << "\n";

  const auto D = rca::deformed_quiver(r, a, std::nullopt, std::nullopt, false);
  for (const auto& x : D.arrows) {
    if (x.src == 3 && x.dst == 0) std::cout << "deformed 3 -> 0: " << x.zlabel << "\n";
  }
}
