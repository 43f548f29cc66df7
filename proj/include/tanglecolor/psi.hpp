#pragma once

#include <string>
#include <vector>

#include "tanglecolor/braid.hpp"
#include "tanglecolor/galex.hpp"
#include "tanglecolor/quandle.hpp"

namespace tc {

// Runs a tuple of strand colors through the braid.  At letter +i, positions
// (i, i+1) holding (a, c) become (c, a*c); at -i they become (c', a) with
// c' * a = c.  The two rules are mutually inverse.
std::vector<int> propagate(const Quandle& q, const BraidWord& b, std::vector<int> top);

// Number of colorings of the closure: top tuples with propagate(top) = top.
// Connected quandles are counted as |Q| times the count with top[0] pinned.
long long closure_coloring_count(const Quandle& q, const BraidWord& b);

// Counts of tangle colorings by the color of the bottom end, over the fiber
// of the base element: counts[i] is the number of colorings of the opened
// closure (strand 1 cut) with top end colored base and bottom end colored
// fiber.elements[i].
struct PsiVector {
  std::string quandle_name;
  std::string knot_name;
  Fiber fib;
  std::vector<long long> counts;

  bool operator==(const PsiVector& o) const {
    return fib.base == o.fib.base && fib.elements == o.fib.elements && counts == o.counts;
  }
};

// Requires a connected quandle (NotConnected otherwise).  The bottom end of
// every coloring lands in the fiber of the base; that law is asserted.
PsiVector psi(const Quandle& q, int base, const BraidWord& b);

// Element of the integral group ring of an abelian coefficient group,
// stored as a coefficient per group element.
struct GroupRingElement {
  FiniteGroup coeff;
  std::vector<long long> coeffs;

  bool operator==(const GroupRingElement& o) const { return coeffs == o.coeffs; }
};

// transport along the inverse: coefficient of l moves to l^-1
GroupRingElement conjugate(const GroupRingElement& v);

std::string to_string(const GroupRingElement& v);

// State sum over all closure colorings by phi.base, each weighted by the
// product of phi(source colors)^(crossing sign).  The coefficient group
// must be abelian (NonAbelianCoefficients) and phi valid (InvalidCocycle).
GroupRingElement phi_state_sum(const Quandle& x, const Cocycle& phi, const BraidWord& b);

// Transport of a PsiVector of an extension quandle with base (1, x0) into
// the coefficient group ring, scaled by |X|.  Requires the projection to be
// inn-equivalent, i.e. the fiber of the base is exactly Lambda x {x0}
// (ProjectionNotInnEquivalent otherwise).
GroupRingElement phi_from_psi(const PsiVector& v, const ExtensionQuandle& ext);

// Psi of a braid and its mirror, reverse, and reverse-mirror, all over the
// fiber ordering of the original.  Asserts the reversal law
// psi(rm)[j] == psi[p(j)] for the end permutation p.
struct SymmetryReport {
  PsiVector k, m, r, rm;
  std::vector<std::string> distinguished;  // subset of {"m","r","rm"}
};
SymmetryReport symmetry_report(const Quandle& q, int base, const BraidWord& b);

}  // namespace tc
