#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tanglecolor/error.hpp"

namespace tc {

// Permutation of {0, ..., d-1} stored as an image array: p[i] is the image
// of point i.  Composition is left-to-right: perm_compose(p, q) applies p
// first, then q.  This matches the right-action convention used throughout
// (the image of a point x under "g then h" is h(g(x))).
using Perm = std::vector<int>;

Perm perm_identity(int degree);
bool perm_is_identity(const Perm& p);
bool is_permutation(const Perm& p);
Perm perm_compose(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
// order of a single permutation (lcm of cycle lengths)
std::uint64_t perm_element_order(const Perm& p);
// sorted cycle lengths, fixed points included
std::vector<int> perm_cycle_type(const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = p.size();
    for (int v : p) h = h * 1000003u + static_cast<std::size_t>(v) + 0x9e37;
    return h;
  }
};

// Default ceiling for operations that need a full element listing.
inline constexpr std::size_t kEnumerationBound = 1'000'000;

// Group generated by permutations of a fixed degree.  A deterministic
// Schreier-Sims run builds a base and stabilizer chain at construction, so
// order() and contains() never enumerate elements.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> generators);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  // product of orbit sizes along the chain
  std::uint64_t order() const;
  // membership by sifting through the chain
  bool contains(const Perm& g) const;

  const std::vector<int>& base() const { return base_; }

 private:
  struct Level {
    int point = 0;
    std::vector<Perm> gens;  // generators fixing all earlier base points
    std::vector<int> orbit;  // BFS order, orbit[0] == point
    std::vector<std::optional<Perm>> transversal;  // point -> rep taking base to it
  };

  int degree_;
  std::vector<Perm> gens_;
  std::vector<int> base_;
  std::vector<Level> chain_;

  void build();
  void rebuild_orbit(int level);
  void add_level(int moved_point);
  // sift g through chain levels [from, end); residue plus stuck level
  std::pair<Perm, int> strip(Perm g, int from) const;
};

// All elements, BFS over generators, returned lexicographically sorted.
// Throws OrderOverflow when the group order exceeds the bound.
std::vector<Perm> enumerate_elements(const PermGroup& g,
                                     std::size_t bound = kEnumerationBound);

// Elements fixing the given point, sorted.  Needs a full listing.
std::vector<Perm> stabilizer(const PermGroup& g, int point,
                             std::size_t bound = kEnumerationBound);

// Elements commuting with x, sorted.  Requires x in g.
std::vector<Perm> centralizer(const PermGroup& g, const Perm& x,
                              std::size_t bound = kEnumerationBound);

// Orbit of x under conjugation by g, sorted.  Requires x in g.
std::vector<Perm> conjugacy_class(const PermGroup& g, const Perm& x,
                                  std::size_t bound = kEnumerationBound);

// Commutator subgroup as the normal closure of generator commutators.
PermGroup derived_subgroup(const PermGroup& g,
                           std::size_t bound = kEnumerationBound);

}  // namespace tc
