#pragma once

#include <string>
#include <vector>

#include "tanglecolor/braid.hpp"
#include "tanglecolor/finite_group.hpp"
#include "tanglecolor/galex.hpp"
#include "tanglecolor/perm_group.hpp"
#include "tanglecolor/quandle.hpp"

// Shared test corpus: small groups, automorphisms, quandles and braid words.
// Everything is built natively and passes through the library validators, so
// a broken fixture fails loudly rather than silently skewing a test.
namespace tcfix {

// Z_n with label i = residue i
tc::FiniteGroup cyclic(int n);

// pairs (a, b) with index a*|B| + b
tc::FiniteGroup direct_product(const tc::FiniteGroup& a, const tc::FiniteGroup& b);

// quaternion group {+-1, +-i, +-j, +-k}, order 8
tc::FiniteGroup quaternion8();

// dihedral group of order 2n: index a + n*b for r^a s^b
tc::FiniteGroup dihedral(int n);

// SL(2,3): 2x2 determinant-1 matrices over F_3, identity first then by
// ascending entry key
tc::FiniteGroup sl23();

// A permutation group flattened to a Cayley table; elements are sorted
// lexicographically so the identity always gets index 0.
struct PermTable {
  tc::FiniteGroup group;
  std::vector<tc::Perm> elements;

  int index_of(const tc::Perm& p) const;
};
PermTable perm_table(const std::string& name, int degree, std::vector<tc::Perm> generators,
                     std::size_t bound = tc::kEnumerationBound);

PermTable symmetric(int n);
PermTable alternating(int n);

// conjugation x -> p^-1 x p as an automorphism of the table group; p need
// not lie in the group, but the conjugate of every element must
tc::GroupAutomorphism conj_auto(const PermTable& t, const tc::Perm& p);

// x -> x^k on Z_n (k coprime to n)
tc::GroupAutomorphism power_auto(const tc::FiniteGroup& zn, int k);

// inversion x -> -x on Z_n
tc::GroupAutomorphism negate_auto(const tc::FiniteGroup& zn);

// dihedral quandle on Z_3: x * y = 2y - x
tc::Quandle r3();

// dihedral quandle on Z_n
tc::Quandle dihedral_quandle(int n);

// x * y = x for all x, y; disconnected for n >= 2
tc::Quandle trivial_quandle(int n);

// The order-24 quandle behind the chirality record: GAlex(SL(2,3), f) for
// the automorphism with fixed subgroup of order 4 making it connected.
// Found by enumeration; the choice among conjugate candidates is immaterial
// and pinned by lexicographic order.
tc::GroupAutomorphism sl23_f4();
tc::Quandle sl23_galex();

// braid words
tc::BraidWord unknot();          // 1 strand, empty word
tc::BraidWord trefoil();         // 2 strands, 1 1 1
tc::BraidWord figure_eight();    // 3 strands, 1 -2 1 -2
tc::BraidWord granny();          // trefoil # trefoil
tc::BraidWord square_knot();     // trefoil # mirror trefoil
tc::BraidWord torus_5_3();       // 5 strands, (1 2 3 4)^3

}  // namespace tcfix
