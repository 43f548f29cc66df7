#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "tanglecolor/error.hpp"

namespace tcorc {

std::vector<int> oracle_propagate(const tc::Quandle& q, const tc::BraidWord& b,
                                  const std::vector<int>& top) {
  std::vector<int> cur = top;
  for (int letter : b.letters) {
    int i = std::abs(letter);  // crosses 0-based positions i-1, i
    int a = cur[i - 1];
    int c = cur[i];
    if (letter > 0) {
      cur[i - 1] = c;
      cur[i] = q.at(a, c);
    } else {
      int y = -1;
      for (int cand = 0; cand < q.order; ++cand)
        if (q.at(cand, a) == c) {
          y = cand;
          break;
        }
      cur[i - 1] = y;
      cur[i] = a;
    }
  }
  return cur;
}

namespace {

// walks all |Q|^free tuples over the free positions
template <class Visit>
void for_all_tuples(int order, std::vector<int>& tuple, const std::vector<int>& free_positions,
                    std::size_t at, Visit&& visit) {
  if (at == free_positions.size()) {
    visit(tuple);
    return;
  }
  for (int c = 0; c < order; ++c) {
    tuple[free_positions[at]] = c;
    for_all_tuples(order, tuple, free_positions, at + 1, visit);
  }
}

}  // namespace

long long oracle_closure_count(const tc::Quandle& q, const tc::BraidWord& b) {
  std::vector<int> free_positions(b.strands);
  std::iota(free_positions.begin(), free_positions.end(), 0);
  std::vector<int> top(b.strands, 0);
  long long count = 0;
  for_all_tuples(q.order, top, free_positions, 0, [&](const std::vector<int>& t) {
    if (oracle_propagate(q, b, t) == t) ++count;
  });
  return count;
}

std::vector<long long> oracle_psi(const tc::Quandle& q, int base, const tc::BraidWord& b) {
  tc::Fiber fib = tc::fiber(q, base);
  std::vector<long long> counts(fib.elements.size(), 0);
  std::vector<int> free_positions;
  for (int p = 1; p < b.strands; ++p) free_positions.push_back(p);
  std::vector<int> top(b.strands, 0);
  top[0] = base;
  for_all_tuples(q.order, top, free_positions, 0, [&](const std::vector<int>& t) {
    std::vector<int> bottom = oracle_propagate(q, b, t);
    for (int p = 1; p < b.strands; ++p)
      if (bottom[p] != t[p]) return;
    int pos = fib.position_of(bottom[0]);
    if (pos < 0) throw tc::Error("Internal", "oracle found a bottom color outside the fiber");
    ++counts[pos];
  });
  return counts;
}

std::vector<long long> oracle_phi(const tc::Cocycle& phi, const tc::BraidWord& b) {
  const tc::Quandle& q = phi.base;
  std::vector<long long> tally(phi.coeff.order, 0);
  std::vector<int> free_positions(b.strands);
  std::iota(free_positions.begin(), free_positions.end(), 0);
  std::vector<int> top(b.strands, 0);
  for_all_tuples(q.order, top, free_positions, 0, [&](const std::vector<int>& t) {
    std::vector<int> cur = t;
    int weight = 0;
    for (int letter : b.letters) {
      int i = std::abs(letter);
      int a = cur[i - 1];
      int c = cur[i];
      if (letter > 0) {
        weight = phi.coeff.mul(weight, phi.at(a, c));
        cur[i - 1] = c;
        cur[i] = q.at(a, c);
      } else {
        int y = -1;
        for (int cand = 0; cand < q.order; ++cand)
          if (q.at(cand, a) == c) {
            y = cand;
            break;
          }
        weight = phi.coeff.mul(weight, phi.coeff.inv(phi.at(y, a)));
        cur[i - 1] = y;
        cur[i] = a;
      }
    }
    if (cur == t) ++tally[weight];
  });
  return tally;
}

long long oracle_perm_group_order(int degree, const std::vector<tc::Perm>& gens,
                                  long long bound) {
  std::set<tc::Perm> seen{tc::perm_identity(degree)};
  std::vector<tc::Perm> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<tc::Perm> next;
    for (const tc::Perm& p : frontier)
      for (const tc::Perm& g : gens) {
        tc::Perm q = tc::perm_compose(p, g);
        if (seen.insert(q).second) {
          if (static_cast<long long>(seen.size()) > bound)
            throw tc::Error("OrderOverflow", "oracle closure exceeded its bound");
          next.push_back(std::move(q));
        }
      }
    frontier = std::move(next);
  }
  return static_cast<long long>(seen.size());
}

long long oracle_automorphism_count(const tc::FiniteGroup& g) {
  int n = g.order;
  std::vector<int> rest(n > 0 ? n - 1 : 0);
  std::iota(rest.begin(), rest.end(), 1);
  long long count = 0;
  do {
    std::vector<int> img(n);
    img[0] = 0;
    for (int i = 1; i < n; ++i) img[i] = rest[i - 1];
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if (img[g.mul(a, b)] != g.mul(img[a], img[b])) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return count;
}

}  // namespace tcorc
