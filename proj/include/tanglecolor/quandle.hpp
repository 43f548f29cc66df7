#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tanglecolor/error.hpp"
#include "tanglecolor/perm_group.hpp"

namespace tc {

// Finite quandle as an operation table over 0-based element indices:
// at(a, b) = a * b.  Columns are the right translations R_b(x) = x * b.
struct Quandle {
  std::string name;
  int order = 0;
  std::vector<int> table;  // row-major

  int at(int a, int b) const { return table[a * order + b]; }
  bool operator==(const Quandle& o) const { return order == o.order && table == o.table; }
};

// Checks idempotency, column bijectivity and right self-distributivity, in
// that order; throws on the first violated axiom with a witness.  Kinds:
// BadTable, NotIdempotent, ColumnNotBijective, NotDistributive.
Quandle validate_quandle(std::string name, int n, std::vector<int> table);

// The unique a with a * b = c.
int star_inv(const Quandle& q, int c, int b);

// right translation R_b as a permutation
Perm right_translation(const Quandle& q, int b);

// Inn(Q): the permutation group generated by the right translations, plus
// the translation map a -> R_a and the distinct columns that generate it.
struct InnerGroup {
  PermGroup group;
  std::vector<Perm> translations;      // per element a: R_a
  std::vector<int> column_class;       // a -> index into distinct_columns
  std::vector<Perm> distinct_columns;  // generators, by first occurrence
};
InnerGroup inner_group(const Quandle& q);

// Inn(Q) acts transitively / columns are pairwise distinct.
bool is_connected(const Quandle& q);
bool is_faithful(const Quandle& q);

// Fiber of the inner representation through e: all b with R_b = R_e.
// Ordered with e first, then ascending.
struct Fiber {
  int base = 0;
  std::vector<int> elements;
  int position_of(int element) const;  // -1 if absent
};
Fiber fiber(const Quandle& q, int e);

// Partition of fiber(q, e) by the Inn(Q)-orbit of the pair (e, b): b and b'
// share a block iff (e, b) and (e, b') lie in one orbit of the diagonal
// action.  Blocks sorted internally, ordered by first appearance in the
// fiber listing; the diagonal pins {e} as its own block.
std::vector<std::vector<int>> pair_orbit_classes(const Quandle& q, int e);

// Involution p on fiber positions with p(0) = 0: p sends the position of b
// to the position of f_b(e) for inner f_b taking b to e.  Candidate images
// for one b always fill a single pair-orbit block; blocks of size > 1 are
// matched order-preservingly (counts are constant on blocks, so any choice
// satisfies the reversal law).  Requires a connected quandle.
std::vector<int> end_permutation(const Quandle& q, int e);

// Isomorphism search by backtracking with forced-product propagation,
// pruned on column cycle type and fiber size.  Returns the element map when
// isomorphic.  Throws TooLarge above the bound.
std::optional<std::vector<int>> quandle_isomorphic(const Quandle& a, const Quandle& b,
                                                   int bound = 24);

// Conjugation quandle on the conjugacy class of x in g: a * b = b^-1 a b.
// Labels follow discovery order of the class BFS; the witness permutations
// are returned alongside.
struct ConjugationQuandle {
  Quandle quandle;
  std::vector<Perm> elements;
};
ConjugationQuandle conjugation_quandle(const PermGroup& g, const Perm& x,
                                       std::size_t bound = kEnumerationBound);

// Image of the inner representation a -> R_a as a quandle (operation
// conjugation, inherited through any representative), plus the projection.
// The projection is a quandle covering.
struct InnerImage {
  Quandle base;
  std::vector<int> map;  // total element -> base element
};
InnerImage inner_image_quandle(const Quandle& q);

}  // namespace tc
