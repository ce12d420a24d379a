// A short walk through the library: normal forms, irreducibles, the order
// on selfadjoint words and a numeric spot check.

#include <iostream>

#include "pisom/pisom.hpp"

using namespace pisom;

int main() {
  ReducedWord const a = parse("(-3,3)");
  ReducedWord const b = parse("(2,-2)");
  std::cout << format(a) << " * " << format(b) << " = " << format(mul(a, b))
            << '\n';

  std::cout << "Irr(D0) with tau+ = 6:";
  for (auto const& w : enum_irr_D0(6).elements) {
    std::cout << ' ' << format(w);
  }
  std::cout << '\n';

  // walk down from (-5,5) to the unit one hollowing step at a time
  ReducedWord n = parse("(-5,5)");
  std::cout << "chain:";
  for (;;) {
    std::cout << ' ' << format(n);
    auto const up = hollow_successors(n, Ambient::D0);
    if (up.empty()) {
      break;
    }
    n = up.front();
  }
  std::cout << '\n';

  GramMatrix const g = gram({parse("(-2,3)"), parse("(-3,4)")});
  std::cout << "gram " << g << " has " << matrix_successors(g).size()
            << " basic successors\n";

  Rng        rng(7);
  auto const rep = random_partial_isometry(4, 7);
  Report const r = verify_order_rep(rep, random_scalar_relations(rng, 100));
  std::cout << "random partial isometry: " << r.total << " relations, "
            << r.failures.size() << " failures\n";
}
