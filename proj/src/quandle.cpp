#include "tanglecolor/quandle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

namespace tc {

namespace {
std::string lbl(int a) { return std::to_string(a + 1); }
}

Quandle validate_quandle(std::string name, int n, std::vector<int> table) {
  if (n < 1) throw Error("BadTable", "order must be >= 1");
  if (static_cast<int>(table.size()) != n * n)
    throw Error("BadTable", "expected " + std::to_string(n * n) + " entries");
  for (int v : table)
    if (v < 0 || v >= n) throw Error("BadTable", "entry " + lbl(v) + " out of range");

  auto at = [&](int a, int b) { return table[a * n + b]; };

  for (int a = 0; a < n; ++a)
    if (at(a, a) != a) throw Error("NotIdempotent", "element " + lbl(a));

  for (int b = 0; b < n; ++b) {
    std::vector<char> seen(n, 0);
    for (int a = 0; a < n; ++a) {
      if (seen[at(a, b)])
        throw Error("ColumnNotBijective", "column " + lbl(b) + " repeats " + lbl(at(a, b)));
      seen[at(a, b)] = 1;
    }
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(at(a, c), at(b, c)))
          throw Error("NotDistributive", "(" + lbl(a) + "*" + lbl(b) + ")*" + lbl(c) +
                                              " != (" + lbl(a) + "*" + lbl(c) + ")*(" + lbl(b) +
                                              "*" + lbl(c) + ")");

  Quandle q;
  q.name = std::move(name);
  q.order = n;
  q.table = std::move(table);
  return q;
}

int star_inv(const Quandle& q, int c, int b) {
  for (int a = 0; a < q.order; ++a)
    if (q.at(a, b) == c) return a;
  throw Error("ColumnNotBijective", "no a with a*" + lbl(b) + " = " + lbl(c));
}

Perm right_translation(const Quandle& q, int b) {
  Perm p(q.order);
  for (int x = 0; x < q.order; ++x) p[x] = q.at(x, b);
  return p;
}

InnerGroup inner_group(const Quandle& q) {
  std::vector<Perm> translations;
  translations.reserve(q.order);
  for (int a = 0; a < q.order; ++a) translations.push_back(right_translation(q, a));

  std::vector<int> column_class(q.order, -1);
  std::vector<Perm> distinct;
  std::map<Perm, int> index;
  for (int a = 0; a < q.order; ++a) {
    auto it = index.find(translations[a]);
    if (it == index.end()) {
      index.emplace(translations[a], static_cast<int>(distinct.size()));
      column_class[a] = static_cast<int>(distinct.size());
      distinct.push_back(translations[a]);
    } else {
      column_class[a] = it->second;
    }
  }
  return InnerGroup{PermGroup(q.order, distinct), std::move(translations),
                    std::move(column_class), std::move(distinct)};
}

bool is_connected(const Quandle& q) {
  // orbit of element 0 under the columns; generator closure suffices since
  // every translation has finite order
  std::vector<char> seen(q.order, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (int b = 0; b < q.order; ++b) {
      int y = q.at(queue[qi], b);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  return static_cast<int>(queue.size()) == q.order;
}

bool is_faithful(const Quandle& q) {
  std::vector<Perm> cols;
  for (int b = 0; b < q.order; ++b) cols.push_back(right_translation(q, b));
  std::sort(cols.begin(), cols.end());
  return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

int Fiber::position_of(int element) const {
  for (int i = 0; i < static_cast<int>(elements.size()); ++i)
    if (elements[i] == element) return i;
  return -1;
}

Fiber fiber(const Quandle& q, int e) {
  if (e < 0 || e >= q.order) throw Error("BadElement", "base element out of range");
  Perm re = right_translation(q, e);
  Fiber f;
  f.base = e;
  f.elements.push_back(e);
  for (int b = 0; b < q.order; ++b)
    if (b != e && right_translation(q, b) == re) f.elements.push_back(b);
  std::sort(f.elements.begin() + 1, f.elements.end());
  return f;
}

namespace {

// Orbit of the ordered pair (u0, v0) under the diagonal action of Inn(Q),
// explored over the distinct columns.  Pairs encoded u*n + v.
std::vector<char> pair_orbit(const Quandle& q, const std::vector<Perm>& gens, int u0, int v0) {
  int n = q.order;
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> queue;
  auto push = [&](int u, int v) {
    int code = u * n + v;
    if (!seen[code]) {
      seen[code] = 1;
      queue.push_back(code);
    }
  };
  push(u0, v0);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi] / n, v = queue[qi] % n;
    for (const Perm& g : gens) push(g[u], g[v]);
  }
  return seen;
}

}  // namespace

std::vector<std::vector<int>> pair_orbit_classes(const Quandle& q, int e) {
  Fiber f = fiber(q, e);
  InnerGroup inn = inner_group(q);
  int n = q.order;
  std::vector<char> classified(f.elements.size(), 0);
  std::vector<std::vector<int>> blocks;
  for (std::size_t i = 0; i < f.elements.size(); ++i) {
    if (classified[i]) continue;
    std::vector<char> orbit = pair_orbit(q, inn.distinct_columns, e, f.elements[i]);
    std::vector<int> block;
    for (std::size_t j = 0; j < f.elements.size(); ++j)
      if (!classified[j] && orbit[static_cast<std::size_t>(e) * n + f.elements[j]]) {
        classified[j] = 1;
        block.push_back(f.elements[j]);
      }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::vector<int> end_permutation(const Quandle& q, int e) {
  if (!is_connected(q)) throw Error("NotConnected", "end permutation needs a connected quandle");
  Fiber f = fiber(q, e);
  InnerGroup inn = inner_group(q);
  int n = q.order;
  std::vector<std::vector<int>> blocks = pair_orbit_classes(q, e);
  auto block_of = [&](int element) {
    for (std::size_t bi = 0; bi < blocks.size(); ++bi)
      for (int x : blocks[bi])
        if (x == element) return static_cast<int>(bi);
    throw Error("Internal", "fiber element missing from pair-orbit blocks");
  };

  // image block per source block: candidates f_b(e) = second components of
  // pairs (e, *) in the orbit of (b, e)
  std::vector<int> block_image(blocks.size(), -1);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    int b = blocks[bi].front();
    std::vector<char> orbit = pair_orbit(q, inn.distinct_columns, b, e);
    int target = -1;
    for (int y : f.elements) {
      if (!orbit[static_cast<std::size_t>(e) * n + y]) continue;
      int tb = block_of(y);
      if (target == -1) target = tb;
      if (tb != target)
        throw Error("Internal", "end permutation candidates span two pair-orbit blocks");
    }
    if (target == -1) throw Error("Internal", "no inner map carries fiber element to base");
    block_image[bi] = target;
  }

  // order-preserving matching between source and image blocks
  std::vector<int> p(f.elements.size(), -1);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const std::vector<int>& src = blocks[bi];
    const std::vector<int>& dst = blocks[block_image[bi]];
    if (src.size() != dst.size())
      throw Error("Internal", "pair-orbit blocks of unequal size matched");
    for (std::size_t k = 0; k < src.size(); ++k)
      p[f.position_of(src[k])] = f.position_of(dst[k]);
  }
  // involution with the base fixed
  if (p[0] != 0) throw Error("Internal", "end permutation moves the base");
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[p[i]] != static_cast<int>(i)) throw Error("Internal", "end permutation is not an involution");
  return p;
}

namespace {

struct IsoInvariant {
  std::vector<int> cycle_type;
  int fiber_size = 0;
  bool operator==(const IsoInvariant& o) const {
    return fiber_size == o.fiber_size && cycle_type == o.cycle_type;
  }
};

std::vector<IsoInvariant> invariants(const Quandle& q) {
  std::vector<int> fsize(q.order, 0);
  std::map<Perm, std::vector<int>> by_col;
  for (int b = 0; b < q.order; ++b) by_col[right_translation(q, b)].push_back(b);
  for (const auto& entry : by_col)
    for (int b : entry.second) fsize[b] = static_cast<int>(entry.second.size());
  std::vector<IsoInvariant> inv(q.order);
  for (int b = 0; b < q.order; ++b)
    inv[b] = IsoInvariant{perm_cycle_type(right_translation(q, b)), fsize[b]};
  return inv;
}

// assign map[a] = b and propagate forced products; false on conflict
bool iso_assign(const Quandle& qa, const Quandle& qb, std::vector<int>& map,
                std::vector<int>& rmap, int a, int b) {
  if (map[a] != -1) return map[a] == b;
  if (rmap[b] != -1) return false;
  map[a] = b;
  rmap[b] = a;
  for (int c = 0; c < qa.order; ++c) {
    if (map[c] == -1) continue;
    if (!iso_assign(qa, qb, map, rmap, qa.at(a, c), qb.at(b, map[c]))) return false;
    if (!iso_assign(qa, qb, map, rmap, qa.at(c, a), qb.at(map[c], b))) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<int>> quandle_isomorphic(const Quandle& a, const Quandle& b, int bound) {
  if (a.order != b.order) return std::nullopt;
  if (a.order > bound)
    throw Error("TooLarge", "isomorphism search is bounded at order " + std::to_string(bound));
  std::vector<IsoInvariant> ia = invariants(a), ib = invariants(b);
  {
    auto key = [](const IsoInvariant& v) { return std::make_pair(v.fiber_size, v.cycle_type); };
    std::multiset<std::pair<int, std::vector<int>>> ka, kb;
    for (const auto& v : ia) ka.insert(key(v));
    for (const auto& v : ib) kb.insert(key(v));
    if (ka != kb) return std::nullopt;
  }
  // re-run the search but keep the successful map
  std::function<bool(std::vector<int>&, std::vector<int>&)> rec =
      [&](std::vector<int>& map, std::vector<int>& rmap) -> bool {
    int x = -1;
    for (int i = 0; i < a.order; ++i)
      if (map[i] == -1) {
        x = i;
        break;
      }
    if (x == -1) return true;
    for (int y = 0; y < b.order; ++y) {
      if (rmap[y] != -1 || !(ia[x] == ib[y])) continue;
      std::vector<int> m2 = map, r2 = rmap;
      if (iso_assign(a, b, m2, r2, x, y) && rec(m2, r2)) {
        map = std::move(m2);
        rmap = std::move(r2);
        return true;
      }
    }
    return false;
  };
  std::vector<int> map(a.order, -1), rmap(b.order, -1);
  if (rec(map, rmap)) return map;
  return std::nullopt;
}

ConjugationQuandle conjugation_quandle(const PermGroup& g, const Perm& x, std::size_t bound) {
  if (!g.contains(x)) throw Error("NotAMember", "element is not in the group");
  // class BFS in discovery order fixes the labeling
  std::vector<Perm> elems;
  std::unordered_map<Perm, int, PermHash> index;
  elems.push_back(x);
  index.emplace(x, 0);
  for (std::size_t qi = 0; qi < elems.size(); ++qi) {
    Perm cur = elems[qi];
    for (const Perm& gen : g.generators()) {
      Perm conj = perm_compose(perm_compose(perm_inverse(gen), cur), gen);
      if (index.emplace(conj, static_cast<int>(elems.size())).second) {
        if (elems.size() >= bound)
          throw Error("OrderOverflow", "conjugacy class exceeds enumeration bound");
        elems.push_back(std::move(conj));
      }
    }
  }
  int n = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Perm prod = perm_compose(perm_compose(perm_inverse(elems[b]), elems[a]), elems[b]);
      auto it = index.find(prod);
      if (it == index.end()) throw Error("Internal", "conjugacy class not closed");
      table[a * n + b] = it->second;
    }
  ConjugationQuandle out;
  out.quandle = validate_quandle("conj", n, std::move(table));
  out.elements = std::move(elems);
  return out;
}

InnerImage inner_image_quandle(const Quandle& q) {
  InnerGroup inn = inner_group(q);
  int m = static_cast<int>(inn.distinct_columns.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m, -1);
  for (int a = 0; a < q.order; ++a)
    for (int b = 0; b < q.order; ++b) {
      int ca = inn.column_class[a], cb = inn.column_class[b];
      int prod = inn.column_class[q.at(a, b)];
      int& slot = table[ca * m + cb];
      if (slot == -1)
        slot = prod;
      else if (slot != prod)
        throw Error("Internal", "inner image product not well-defined");
    }
  InnerImage out;
  out.base = validate_quandle(q.name + "/inn", m, std::move(table));
  out.map = inn.column_class;
  return out;
}

}  // namespace tc
