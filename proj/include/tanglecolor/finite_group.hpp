#pragma once

#include <string>
#include <vector>

#include "tanglecolor/error.hpp"

namespace tc {

// Finite group as a Cayley table over 0-based element indices; index 0 is
// always the identity.  File formats and error witnesses use 1-based labels,
// converted at the boundary.
struct FiniteGroup {
  std::string name;
  int order = 0;
  std::vector<int> table;    // row-major: table[a*order + b] = a*b
  std::vector<int> inverse;  // inverse[a]*a == a*inverse[a] == 0

  int mul(int a, int b) const { return table[a * order + b]; }
  int inv(int a) const { return inverse[a]; }
};

// Largest order accepted for a Cayley-table group.
inline constexpr int kMaxTableOrder = 2048;

// Checks identity-at-0, Latin-square rows and columns, two-sided inverses
// and associativity, in that order; throws on the first violated law with
// a witness.  Kinds: BadTable, NoIdentity, NotLatinSquare, NoInverse,
// NotAssociative.
FiniteGroup validate_group(std::string name, int n, std::vector<int> table);

// Subset of a parent group's elements, sorted ascending.
struct Subgroup {
  std::vector<int> elements;
  int order() const { return static_cast<int>(elements.size()); }
};

// Validates closure, identity and inverses.  Throws NotASubgroup.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements);

// Closure of a seed set under multiplication (finite, so inverses come free).
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& seed);

bool is_abelian(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g, const Subgroup& s);

// multiplicative order of an element
int element_order(const FiniteGroup& g, int a);

// Bijective map on element indices respecting the product.
struct GroupAutomorphism {
  std::vector<int> images;
  int operator()(int a) const { return images[a]; }
};

// Throws NotBijective / NotHomomorphism with a witness pair.
GroupAutomorphism automorphism_from_images(const FiniteGroup& g, std::vector<int> images);

GroupAutomorphism automorphism_identity(const FiniteGroup& g);
// apply f first, then g
GroupAutomorphism automorphism_compose(const GroupAutomorphism& f, const GroupAutomorphism& g);
GroupAutomorphism automorphism_inverse(const GroupAutomorphism& f);

// fixed-point subgroup {x : f(x) = x}
Subgroup fixed_subgroup(const FiniteGroup& g, const GroupAutomorphism& f);

// The subgroup as an abstract group: identity first, then ascending parent
// label.  rep[i] is the parent element behind index i.
struct SubgroupAsGroup {
  FiniteGroup group;
  std::vector<int> rep;
};
SubgroupAsGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& s, std::string name);

// Full automorphism group by backtracking over images of a greedily chosen
// minimal generating set, plus the partition into conjugacy classes inside
// Aut(G).  Bounded: throws GroupTooLarge above the order bound.
struct AutomorphismSet {
  std::vector<GroupAutomorphism> autos;    // sorted lexicographically by images
  std::vector<std::vector<int>> classes;   // indices into autos, by first appearance
};
AutomorphismSet enumerate_automorphisms(const FiniteGroup& g, int bound = 64);

// Greedy minimal generating set: repeatedly add the element that grows the
// generated subgroup the most (ties to the smallest label).
std::vector<int> minimal_generating_set(const FiniteGroup& g);

}  // namespace tc
