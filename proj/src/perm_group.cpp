#include "tanglecolor/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

namespace tc {

Perm perm_identity(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool perm_is_identity(const Perm& p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] != i) return false;
  return true;
}

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

std::uint64_t perm_element_order(const Perm& p) {
  std::uint64_t ord = 1;
  for (int len : perm_cycle_type(p)) ord = std::lcm(ord, static_cast<std::uint64_t>(len));
  return ord;
}

std::vector<int> perm_cycle_type(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  std::vector<int> lens;
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  if (degree_ < 1) throw Error("BadDegree", "degree must be >= 1");
  for (const Perm& g : gens_) {
    if (static_cast<int>(g.size()) != degree_ || !is_permutation(g))
      throw Error("NotAPermutation", "generator is not a permutation of the stated degree");
  }
  build();
}

void PermGroup::add_level(int moved_point) {
  Level lvl;
  lvl.point = moved_point;
  base_.push_back(moved_point);
  chain_.push_back(std::move(lvl));
}

void PermGroup::rebuild_orbit(int level) {
  Level& lvl = chain_[level];
  lvl.orbit.clear();
  lvl.transversal.assign(degree_, std::nullopt);
  lvl.transversal[lvl.point] = perm_identity(degree_);
  lvl.orbit.push_back(lvl.point);
  for (std::size_t qi = 0; qi < lvl.orbit.size(); ++qi) {
    int x = lvl.orbit[qi];
    for (const Perm& g : lvl.gens) {
      int y = g[x];
      if (!lvl.transversal[y]) {
        lvl.transversal[y] = perm_compose(*lvl.transversal[x], g);
        lvl.orbit.push_back(y);
      }
    }
  }
}

std::pair<Perm, int> PermGroup::strip(Perm g, int from) const {
  for (int i = from; i < static_cast<int>(chain_.size()); ++i) {
    int x = g[chain_[i].point];
    if (!chain_[i].transversal[x]) return {std::move(g), i};
    g = perm_compose(g, perm_inverse(*chain_[i].transversal[x]));
  }
  return {std::move(g), static_cast<int>(chain_.size())};
}

namespace {
int first_moved_point(const Perm& p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] != i) return i;
  return -1;
}
}  // namespace

// Deterministic Schreier-Sims.  Level i is "verified" when every Schreier
// generator of its orbit sifts to the identity through the deeper levels.
// A failing residue fixes the base points of every level above the one
// where the sift got stuck, so it joins the generating set of each level
// from i+1 down to the stuck level; verification resumes at the stuck
// level and walks back up.  On exit the chain is a base and strong
// generating set, so order and membership are exact.
void PermGroup::build() {
  base_.clear();
  chain_.clear();
  std::vector<Perm> start;
  for (const Perm& g : gens_)
    if (!perm_is_identity(g)) start.push_back(g);
  if (start.empty()) return;

  add_level(first_moved_point(start.front()));
  chain_[0].gens = start;
  rebuild_orbit(0);

  int i = 0;
  while (i >= 0) {
    bool clean = true;
    for (std::size_t oi = 0; clean && oi < chain_[i].orbit.size(); ++oi) {
      const int x = chain_[i].orbit[oi];
      for (std::size_t gi = 0; clean && gi < chain_[i].gens.size(); ++gi) {
        const Perm& g = chain_[i].gens[gi];
        const int y = g[x];
        Perm schreier = perm_compose(perm_compose(*chain_[i].transversal[x], g),
                                     perm_inverse(*chain_[i].transversal[y]));
        if (perm_is_identity(schreier)) continue;
        auto [h, j] = strip(std::move(schreier), i + 1);
        if (perm_is_identity(h)) continue;
        if (j == static_cast<int>(chain_.size())) add_level(first_moved_point(h));
        for (int m = i + 1; m <= j; ++m) chain_[m].gens.push_back(h);
        for (int m = i + 1; m <= j; ++m) rebuild_orbit(m);
        i = j;
        clean = false;
      }
    }
    if (clean) --i;
  }
}

std::uint64_t PermGroup::order() const {
  unsigned __int128 ord = 1;
  for (const Level& lvl : chain_) {
    ord *= lvl.orbit.size();
    if (ord > static_cast<unsigned __int128>(UINT64_MAX))
      throw Error("OrderOverflow", "group order exceeds 2^64");
  }
  return static_cast<std::uint64_t>(ord);
}

bool PermGroup::contains(const Perm& g) const {
  if (static_cast<int>(g.size()) != degree_ || !is_permutation(g)) return false;
  auto [h, lvl] = strip(g, 0);
  (void)lvl;
  return perm_is_identity(h);
}

std::vector<Perm> enumerate_elements(const PermGroup& g, std::size_t bound) {
  if (g.order() > bound)
    throw Error("OrderOverflow", "group order " + std::to_string(g.order()) +
                                     " exceeds enumeration bound " + std::to_string(bound));
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> queue;
  queue.push_back(perm_identity(g.degree()));
  seen.insert(queue.front());
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Perm cur = queue[qi];  // copy: queue may reallocate
    for (const Perm& gen : g.generators()) {
      Perm next = perm_compose(cur, gen);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<Perm> stabilizer(const PermGroup& g, int point, std::size_t bound) {
  if (point < 0 || point >= g.degree()) throw Error("BadPoint", "point out of range");
  std::vector<Perm> out;
  for (const Perm& p : enumerate_elements(g, bound))
    if (p[point] == point) out.push_back(p);
  return out;
}

std::vector<Perm> centralizer(const PermGroup& g, const Perm& x, std::size_t bound) {
  if (!g.contains(x)) throw Error("NotAMember", "element is not in the group");
  std::vector<Perm> out;
  for (const Perm& p : enumerate_elements(g, bound))
    if (perm_compose(p, x) == perm_compose(x, p)) out.push_back(p);
  return out;
}

std::vector<Perm> conjugacy_class(const PermGroup& g, const Perm& x, std::size_t bound) {
  if (!g.contains(x)) throw Error("NotAMember", "element is not in the group");
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> queue;
  queue.push_back(x);
  seen.insert(x);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Perm cur = queue[qi];
    for (const Perm& gen : g.generators()) {
      Perm conj = perm_compose(perm_compose(perm_inverse(gen), cur), gen);
      if (seen.insert(conj).second) {
        if (seen.size() > bound)
          throw Error("OrderOverflow", "conjugacy class exceeds enumeration bound");
        queue.push_back(std::move(conj));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

PermGroup derived_subgroup(const PermGroup& g, std::size_t bound) {
  if (g.order() > bound)
    throw Error("OrderOverflow", "group order exceeds enumeration bound");
  // commutators of generator pairs, then normal closure under conjugation
  std::vector<Perm> dgens;
  PermGroup d(g.degree(), {});
  std::vector<Perm> pending;
  auto absorb = [&](Perm p) {
    if (!d.contains(p)) {
      dgens.push_back(p);
      d = PermGroup(g.degree(), dgens);
      pending.push_back(std::move(p));
    }
  };
  for (const Perm& a : g.generators())
    for (const Perm& b : g.generators()) {
      Perm comm = perm_compose(perm_compose(perm_inverse(a), perm_inverse(b)),
                               perm_compose(a, b));
      absorb(std::move(comm));
    }
  for (std::size_t qi = 0; qi < pending.size(); ++qi) {
    Perm cur = pending[qi];
    for (const Perm& gen : g.generators())
      absorb(perm_compose(perm_compose(perm_inverse(gen), cur), gen));
  }
  return d;
}

}  // namespace tc
