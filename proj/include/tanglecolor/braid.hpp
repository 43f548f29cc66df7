#pragma once

#include <string>
#include <vector>

#include "tanglecolor/error.hpp"
#include "tanglecolor/perm_group.hpp"

namespace tc {

// Braid word whose closure is a knot.  Letters are signed generator indices
// in 1..strands-1: +i crosses positions i, i+1 positively, -i negatively.
struct BraidWord {
  std::string name;
  int strands = 1;
  std::vector<int> letters;
};

// Validates letter range (BadLetter) and that the strand permutation of the
// closure is a single cycle (NotAKnot).
BraidWord make_braid(std::string name, int strands, std::vector<int> letters);

// permutation sending a top position to the bottom position of its strand
Perm strand_permutation(const BraidWord& b);

// mirror image: every crossing sign flipped
BraidWord mirror(const BraidWord& b);

// orientation reversal: letters in reverse order, generator index i -> n-i,
// signs kept
BraidWord reversed(const BraidWord& b);

BraidWord reverse_mirror(const BraidWord& b);

// closure of the concatenation: b2's letters shifted past b1's strands,
// on strands(b1) + strands(b2) - 1 strands
BraidWord connected_sum(const BraidWord& b1, const BraidWord& b2);

// The tangle obtained by opening strand 1 of the closure: the top of
// position 1 is the tangle's top arc, the bottom of position 1 its bottom
// arc; all other positions stay closed.
struct Tangle {
  BraidWord braid;
};

}  // namespace tc
