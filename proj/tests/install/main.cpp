#include <iostream>
#include "state4/category/generators.hpp"
#include "state4/simplicial/complex.hpp"
#include "state4/statesum/state_sum.hpp"
int main() {
  using namespace state4;
  auto g = GroupPresentation::preset("Z2");
  auto k = OrderedOrientedComplex::from_complex(boundary_of_simplex(5));
  std::cout << state_sum(k, gen_twisted_dw(g, CochainTable::trivial(g, 4))).to_string() << "\n";
}
