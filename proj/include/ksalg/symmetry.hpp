#pragma once

#include <string>
#include <vector>

#include "ksalg/algebra.hpp"
#include "ksalg/quiver.hpp"

namespace ksalg {

// (n,k,S) -> (n,k,rho S); Br and Bl swap, the rest keep their flavor
AlgebraContext rho_context(const AlgebraContext& ctx);
IState rho_state(const IState& x);  // {n - a}
BasisElement rho_basis(const BasisElement& b, int n);
BasisElement o_basis(const BasisElement& b);

// rho: B(n,k,S) -> B(n,k,rho S), an algebra isomorphism
Element rho(const Element& a);
// o: B -> B^op, swaps the idempotents
Element o(const Element& a);

EdgeLabel rho_label(const EdgeLabel& e, int n);
Path rho(const Path& p);
Path o(const Path& p);

struct SymmetryReport {
  bool ok = true;
  std::size_t elements = 0;
  std::size_t products = 0;
  std::vector<std::string> failures;
};

// elements: every canonical basis element with U-degree <= degree_cap
SymmetryReport symmetry_report(const AlgebraContext& ctx, int degree_cap = 2);

// canonical basis elements of U-degree <= degree_cap, over all pairs of admissible states
std::vector<BasisElement> bounded_basis(const AlgebraContext& ctx, int degree_cap);

}  // namespace ksalg
