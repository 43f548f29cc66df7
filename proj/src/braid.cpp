#include "tanglecolor/braid.hpp"

#include <algorithm>
#include <cstdlib>

namespace tc {

Perm strand_permutation(const BraidWord& b) {
  Perm pos = perm_identity(b.strands);  // strand -> current position
  for (int letter : b.letters) {
    int i = std::abs(letter) - 1;
    for (int s = 0; s < b.strands; ++s) {
      if (pos[s] == i)
        pos[s] = i + 1;
      else if (pos[s] == i + 1)
        pos[s] = i;
    }
  }
  return pos;
}

BraidWord make_braid(std::string name, int strands, std::vector<int> letters) {
  if (strands < 1) throw Error("BadLetter", "braid needs at least one strand");
  for (int letter : letters) {
    int i = std::abs(letter);
    if (i < 1 || i >= strands)
      throw Error("BadLetter", "letter " + std::to_string(letter) + " outside 1.." +
                                   std::to_string(strands - 1));
  }
  BraidWord b{std::move(name), strands, std::move(letters)};
  // knot closure: the strand permutation must be one cycle
  Perm p = strand_permutation(b);
  if (static_cast<int>(perm_cycle_type(p).size()) != 1)
    throw Error("NotAKnot", "closure of " + b.name + " has " +
                                std::to_string(perm_cycle_type(p).size()) + " components");
  return b;
}

BraidWord mirror(const BraidWord& b) {
  BraidWord out = b;
  out.name = "m(" + b.name + ")";
  for (int& letter : out.letters) letter = -letter;
  return out;
}

BraidWord reversed(const BraidWord& b) {
  BraidWord out = b;
  out.name = "r(" + b.name + ")";
  std::reverse(out.letters.begin(), out.letters.end());
  for (int& letter : out.letters) {
    int sign = letter > 0 ? 1 : -1;
    letter = sign * (b.strands - std::abs(letter));
  }
  return out;
}

BraidWord reverse_mirror(const BraidWord& b) {
  BraidWord out = mirror(reversed(b));
  out.name = "rm(" + b.name + ")";
  return out;
}

BraidWord connected_sum(const BraidWord& b1, const BraidWord& b2) {
  BraidWord out;
  out.name = b1.name + "#" + b2.name;
  out.strands = b1.strands + b2.strands - 1;
  out.letters = b1.letters;
  int shift = b1.strands - 1;
  for (int letter : b2.letters) {
    int sign = letter > 0 ? 1 : -1;
    out.letters.push_back(sign * (std::abs(letter) + shift));
  }
  return make_braid(out.name, out.strands, std::move(out.letters));
}

}  // namespace tc
