#include "tanglecolor/finite_group.hpp"

#include <algorithm>
#include <functional>

namespace tc {

namespace {
std::string lbl(int a) { return std::to_string(a + 1); }  // 1-based in messages
}

FiniteGroup validate_group(std::string name, int n, std::vector<int> table) {
  if (n < 1) throw Error("BadTable", "order must be >= 1");
  if (n > kMaxTableOrder)
    throw Error("GroupTooLarge", "Cayley tables are limited to order " +
                                     std::to_string(kMaxTableOrder));
  if (static_cast<int>(table.size()) != n * n)
    throw Error("BadTable", "expected " + std::to_string(n * n) + " entries");
  for (int v : table)
    if (v < 0 || v >= n) throw Error("BadTable", "entry " + lbl(v) + " out of range");

  auto at = [&](int a, int b) { return table[a * n + b]; };

  // identity must sit at label 1
  for (int a = 0; a < n; ++a)
    if (at(0, a) != a || at(a, 0) != a)
      throw Error("NoIdentity", "label 1 does not act as identity on " + lbl(a));

  for (int a = 0; a < n; ++a) {
    std::vector<char> seen(n, 0);
    for (int b = 0; b < n; ++b) {
      if (seen[at(a, b)])
        throw Error("NotLatinSquare", "row " + lbl(a) + " repeats " + lbl(at(a, b)));
      seen[at(a, b)] = 1;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::vector<char> seen(n, 0);
    for (int a = 0; a < n; ++a) {
      if (seen[at(a, b)])
        throw Error("NotLatinSquare", "column " + lbl(b) + " repeats " + lbl(at(a, b)));
      seen[at(a, b)] = 1;
    }
  }

  std::vector<int> inverse(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (at(a, b) == 0 && at(b, a) == 0) {
        inverse[a] = b;
        break;
      }
    if (inverse[a] < 0) throw Error("NoInverse", "element " + lbl(a) + " has no two-sided inverse");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw Error("NotAssociative",
                      "(" + lbl(a) + "*" + lbl(b) + ")*" + lbl(c) + " != " + lbl(a) + "*(" +
                          lbl(b) + "*" + lbl(c) + ")");

  FiniteGroup g;
  g.name = std::move(name);
  g.order = n;
  g.table = std::move(table);
  g.inverse = std::move(inverse);
  return g;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (int a : elements)
    if (a < 0 || a >= g.order) throw Error("NotASubgroup", "element " + lbl(a) + " out of range");
  std::vector<char> in(g.order, 0);
  for (int a : elements) in[a] = 1;
  if (elements.empty() || !in[0]) throw Error("NotASubgroup", "missing identity");
  for (int a : elements) {
    if (!in[g.inv(a)]) throw Error("NotASubgroup", "missing inverse of " + lbl(a));
    for (int b : elements)
      if (!in[g.mul(a, b)])
        throw Error("NotASubgroup", "not closed: " + lbl(a) + "*" + lbl(b));
  }
  return Subgroup{std::move(elements)};
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& seed) {
  std::vector<char> in(g.order, 0);
  std::vector<int> queue;
  auto push = [&](int a) {
    if (!in[a]) {
      in[a] = 1;
      queue.push_back(a);
    }
  };
  push(0);
  for (int a : seed) push(a);
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (std::size_t gi = 0; gi < queue.size(); ++gi) {
      push(g.mul(queue[qi], queue[gi]));
      push(g.mul(queue[gi], queue[qi]));
    }
  std::sort(queue.begin(), queue.end());
  return Subgroup{std::move(queue)};
}

bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.order; ++a)
    for (int b = a + 1; b < g.order; ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_abelian(const FiniteGroup& g, const Subgroup& s) {
  for (int a : s.elements)
    for (int b : s.elements)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

int element_order(const FiniteGroup& g, int a) {
  int ord = 1;
  for (int x = a; x != 0; x = g.mul(x, a)) ++ord;
  return ord;
}

GroupAutomorphism automorphism_from_images(const FiniteGroup& g, std::vector<int> images) {
  if (static_cast<int>(images.size()) != g.order)
    throw Error("NotBijective", "image array has wrong length");
  std::vector<char> seen(g.order, 0);
  for (int v : images) {
    if (v < 0 || v >= g.order || seen[v]) throw Error("NotBijective", "images are not a bijection");
    seen[v] = 1;
  }
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (images[g.mul(a, b)] != g.mul(images[a], images[b]))
        throw Error("NotHomomorphism", "breaks at pair (" + lbl(a) + "," + lbl(b) + ")");
  return GroupAutomorphism{std::move(images)};
}

GroupAutomorphism automorphism_identity(const FiniteGroup& g) {
  std::vector<int> images(g.order);
  for (int a = 0; a < g.order; ++a) images[a] = a;
  return GroupAutomorphism{std::move(images)};
}

GroupAutomorphism automorphism_compose(const GroupAutomorphism& f, const GroupAutomorphism& g) {
  std::vector<int> images(f.images.size());
  for (std::size_t a = 0; a < images.size(); ++a) images[a] = g.images[f.images[a]];
  return GroupAutomorphism{std::move(images)};
}

GroupAutomorphism automorphism_inverse(const GroupAutomorphism& f) {
  std::vector<int> images(f.images.size());
  for (std::size_t a = 0; a < images.size(); ++a) images[f.images[a]] = static_cast<int>(a);
  return GroupAutomorphism{std::move(images)};
}

Subgroup fixed_subgroup(const FiniteGroup& g, const GroupAutomorphism& f) {
  std::vector<int> fixed;
  for (int a = 0; a < g.order; ++a)
    if (f.images[a] == a) fixed.push_back(a);
  return make_subgroup(g, std::move(fixed));  // fixed points of an automorphism form a subgroup
}

SubgroupAsGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& s, std::string name) {
  std::vector<int> rep = s.elements;  // sorted; identity 0 is smallest, lands first
  std::vector<int> index_of(g.order, -1);
  for (int i = 0; i < static_cast<int>(rep.size()); ++i) index_of[rep[i]] = i;
  int m = static_cast<int>(rep.size());
  std::vector<int> table(m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int prod = index_of[g.mul(rep[a], rep[b])];
      if (prod < 0) throw Error("NotASubgroup", "subgroup is not closed");
      table[a * m + b] = prod;
    }
  return SubgroupAsGroup{validate_group(std::move(name), m, std::move(table)), std::move(rep)};
}

std::vector<int> minimal_generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  Subgroup cur{{0}};
  while (cur.order() < g.order) {
    std::vector<char> in(g.order, 0);
    for (int a : cur.elements) in[a] = 1;
    int best = -1, best_size = -1;
    for (int x = 0; x < g.order; ++x) {
      if (in[x]) continue;
      std::vector<int> seed = gens;
      seed.push_back(x);
      int size = subgroup_closure(g, seed).order();
      if (size > best_size) {
        best_size = size;
        best = x;
      }
    }
    gens.push_back(best);
    cur = subgroup_closure(g, gens);
  }
  if (gens.empty()) gens.push_back(0);  // trivial group: generated by identity
  return gens;
}

namespace {

// Breadth-first spanning data over the Cayley graph on right multiplication
// by the generators: every element is identity * gen-word.
struct Spanning {
  std::vector<int> parent;   // previous element, -1 for identity
  std::vector<int> via;      // generator index used
  std::vector<int> order_of; // BFS discovery order
};

Spanning span(const FiniteGroup& g, const std::vector<int>& gens) {
  Spanning s;
  s.parent.assign(g.order, -2);
  s.via.assign(g.order, -1);
  s.parent[0] = -1;
  s.order_of.push_back(0);
  for (std::size_t qi = 0; qi < s.order_of.size(); ++qi) {
    int cur = s.order_of[qi];
    for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi) {
      int next = g.mul(cur, gens[gi]);
      if (s.parent[next] == -2) {
        s.parent[next] = cur;
        s.via[next] = gi;
        s.order_of.push_back(next);
      }
    }
  }
  return s;
}

}  // namespace

AutomorphismSet enumerate_automorphisms(const FiniteGroup& g, int bound) {
  if (g.order > bound)
    throw Error("GroupTooLarge", "automorphism enumeration is bounded at order " +
                                     std::to_string(bound));
  std::vector<int> gens = minimal_generating_set(g);
  Spanning sp = span(g, gens);
  if (static_cast<int>(sp.order_of.size()) != g.order)
    throw Error("BadTable", "generating set does not span");  // unreachable for valid groups

  std::vector<int> ord(g.order);
  for (int a = 0; a < g.order; ++a) ord[a] = element_order(g, a);

  // candidate images per generator: elements of the same order
  std::vector<std::vector<int>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (int x = 0; x < g.order; ++x)
      if (ord[x] == ord[gens[i]]) cands[i].push_back(x);

  std::vector<GroupAutomorphism> autos;
  std::vector<int> pick(gens.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == gens.size()) {
      // extend generator images along the spanning forest, then verify
      std::vector<int> images(g.order, -1);
      images[0] = 0;
      for (int e : sp.order_of) {
        if (e == 0) continue;
        images[e] = g.mul(images[sp.parent[e]], pick[sp.via[e]]);
      }
      std::vector<char> seen(g.order, 0);
      for (int v : images) {
        if (seen[v]) return;
        seen[v] = 1;
      }
      for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
          if (images[g.mul(a, b)] != g.mul(images[a], images[b])) return;
      autos.push_back(GroupAutomorphism{std::move(images)});
      return;
    }
    for (int x : cands[i]) {
      pick[i] = x;
      rec(i + 1);
    }
  };
  rec(0);

  std::sort(autos.begin(), autos.end(),
            [](const GroupAutomorphism& a, const GroupAutomorphism& b) {
              return a.images < b.images;
            });

  // conjugacy classes inside Aut(G)
  AutomorphismSet out;
  out.autos = std::move(autos);
  {
    std::vector<std::vector<int>> keys;
    for (const auto& a : out.autos) keys.push_back(a.images);
    auto find = [&](const std::vector<int>& k) {
      return static_cast<int>(std::lower_bound(keys.begin(), keys.end(), k) - keys.begin());
    };
    std::vector<char> classified(out.autos.size(), 0);
    for (std::size_t i = 0; i < out.autos.size(); ++i) {
      if (classified[i]) continue;
      std::vector<int> cls;
      std::vector<int> queue{static_cast<int>(i)};
      classified[i] = 1;
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        cls.push_back(queue[qi]);
        for (const auto& t : out.autos) {
          GroupAutomorphism conj = automorphism_compose(
              automorphism_compose(automorphism_inverse(t), out.autos[queue[qi]]), t);
          int j = find(conj.images);
          if (!classified[j]) {
            classified[j] = 1;
            queue.push_back(j);
          }
        }
      }
      std::sort(cls.begin(), cls.end());
      out.classes.push_back(std::move(cls));
    }
  }
  return out;
}

}  // namespace tc
