#include "fixtures.hpp"

#include <algorithm>
#include <map>

#include "tanglecolor/error.hpp"

namespace tcfix {

using tc::FiniteGroup;
using tc::GroupAutomorphism;
using tc::Perm;
using tc::Quandle;

FiniteGroup cyclic(int n) {
  std::vector<int> table(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
  return tc::validate_group("z" + std::to_string(n), n, std::move(table));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int n = a.order * b.order;
  std::vector<int> table(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int p = a.mul(i / b.order, j / b.order);
      int q = b.mul(i % b.order, j % b.order);
      table[i * n + j] = p * b.order + q;
    }
  return tc::validate_group(a.name + "x" + b.name, n, std::move(table));
}

FiniteGroup quaternion8() {
  // index = 2*unit + sign, units 1, i, j, k
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<int> table(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int u = x / 2, s = x % 2, v = y / 2, t = y % 2;
      int unit = unit_mul[u][v];
      int sign = (s + t + unit_sign[u][v]) % 2;
      table[x * 8 + y] = 2 * unit + sign;
    }
  return tc::validate_group("q8", 8, std::move(table));
}

FiniteGroup dihedral(int n) {
  int order = 2 * n;
  auto idx = [n](int a, int b) { return a + n * b; };
  std::vector<int> table(order * order);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < 2; ++d) {
          int rot = (a + (b ? (n - c) % n : c)) % n;
          table[idx(a, b) * order + idx(c, d)] = idx(rot, (b + d) % 2);
        }
  return tc::validate_group("d" + std::to_string(n), order, std::move(table));
}

FiniteGroup sl23() {
  static const FiniteGroup cached = [] {
    auto det1 = [](int k) {
      int a = k / 27, b = (k / 9) % 3, c = (k / 3) % 3, d = k % 3;
      return ((a * d - b * c) % 3 + 3) % 3 == 1;
    };
    const int identity_key = 1 * 27 + 0 * 9 + 0 * 3 + 1;
    std::vector<int> keys{identity_key};
    for (int k = 0; k < 81; ++k)
      if (k != identity_key && det1(k)) keys.push_back(k);
    std::map<int, int> index;
    for (std::size_t i = 0; i < keys.size(); ++i) index[keys[i]] = static_cast<int>(i);
    int n = static_cast<int>(keys.size());
    std::vector<int> table(n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int a = keys[x] / 27, b = (keys[x] / 9) % 3, c = (keys[x] / 3) % 3, d = keys[x] % 3;
        int e = keys[y] / 27, f = (keys[y] / 9) % 3, g = (keys[y] / 3) % 3, h = keys[y] % 3;
        int pa = (a * e + b * g) % 3, pb = (a * f + b * h) % 3;
        int pc = (c * e + d * g) % 3, pd = (c * f + d * h) % 3;
        table[x * n + y] = index.at(pa * 27 + pb * 9 + pc * 3 + pd);
      }
    return tc::validate_group("sl23", n, std::move(table));
  }();
  return cached;
}

int PermTable::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it == elements.end() || *it != p)
    throw tc::Error("NotAMember", "permutation missing from table group '" + group.name + "'");
  return static_cast<int>(it - elements.begin());
}

PermTable perm_table(const std::string& name, int degree, std::vector<tc::Perm> generators,
                     std::size_t bound) {
  tc::PermGroup pg(degree, std::move(generators));
  PermTable t;
  t.elements = tc::enumerate_elements(pg, bound);
  int n = static_cast<int>(t.elements.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Perm prod = tc::perm_compose(t.elements[x], t.elements[y]);
      auto it = std::lower_bound(t.elements.begin(), t.elements.end(), prod);
      table[x * n + y] = static_cast<int>(it - t.elements.begin());
    }
  t.group = tc::validate_group(name, n, std::move(table));
  return t;
}

namespace {

Perm transposition(int degree, int i, int j) {
  Perm p = tc::perm_identity(degree);
  std::swap(p[i], p[j]);
  return p;
}

Perm three_cycle(int degree, int i, int j, int k) {
  Perm p = tc::perm_identity(degree);
  p[i] = j;
  p[j] = k;
  p[k] = i;
  return p;
}

}  // namespace

PermTable symmetric(int n) {
  std::vector<Perm> gens;
  for (int i = 0; i + 1 < n; ++i) gens.push_back(transposition(n, i, i + 1));
  return perm_table("s" + std::to_string(n), n, std::move(gens));
}

PermTable alternating(int n) {
  std::vector<Perm> gens;
  for (int i = 0; i + 2 < n; ++i) gens.push_back(three_cycle(n, i, i + 1, i + 2));
  return perm_table("a" + std::to_string(n), n, std::move(gens));
}

GroupAutomorphism conj_auto(const PermTable& t, const Perm& p) {
  Perm pinv = tc::perm_inverse(p);
  std::vector<int> images;
  images.reserve(t.elements.size());
  for (const Perm& x : t.elements)
    images.push_back(t.index_of(tc::perm_compose(tc::perm_compose(pinv, x), p)));
  return tc::automorphism_from_images(t.group, std::move(images));
}

GroupAutomorphism power_auto(const FiniteGroup& zn, int k) {
  std::vector<int> images;
  for (int x = 0; x < zn.order; ++x) images.push_back(x * k % zn.order);
  return tc::automorphism_from_images(zn, std::move(images));
}

GroupAutomorphism negate_auto(const FiniteGroup& zn) {
  std::vector<int> images;
  for (int x = 0; x < zn.order; ++x) images.push_back((zn.order - x) % zn.order);
  return tc::automorphism_from_images(zn, std::move(images));
}

Quandle r3() { return dihedral_quandle(3); }

Quandle dihedral_quandle(int n) {
  std::vector<int> table(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x * n + y] = ((2 * y - x) % n + n) % n;
  return tc::validate_quandle("r" + std::to_string(n), n, std::move(table));
}

Quandle trivial_quandle(int n) {
  std::vector<int> table(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x * n + y] = x;
  return tc::validate_quandle("trivial" + std::to_string(n), n, std::move(table));
}

GroupAutomorphism sl23_f4() {
  static const GroupAutomorphism cached = [] {
    FiniteGroup g = sl23();
    tc::AutomorphismSet all = tc::enumerate_automorphisms(g);
    for (const GroupAutomorphism& f : all.autos) {
      if (tc::fixed_subgroup(g, f).order() != 4) continue;
      if (tc::is_connected(tc::galex(g, f))) return f;
    }
    throw tc::Error("Internal", "no order-4-fix automorphism with connected quandle on sl23");
  }();
  return cached;
}

Quandle sl23_galex() {
  static const Quandle cached = [] {
    Quandle q = tc::galex(sl23(), sl23_f4(), "sl23galex");
    return tc::validate_quandle(q.name, q.order, q.table);
  }();
  return cached;
}

tc::BraidWord unknot() { return tc::make_braid("0_1", 1, {}); }

tc::BraidWord trefoil() { return tc::make_braid("3_1", 2, {1, 1, 1}); }

tc::BraidWord figure_eight() { return tc::make_braid("4_1", 3, {1, -2, 1, -2}); }

tc::BraidWord granny() {
  tc::BraidWord b = tc::connected_sum(trefoil(), trefoil());
  b.name = "granny";
  return b;
}

tc::BraidWord square_knot() {
  tc::BraidWord b = tc::connected_sum(trefoil(), tc::mirror(trefoil()));
  b.name = "square";
  return b;
}

tc::BraidWord torus_5_3() {
  return tc::make_braid("t53", 5, {1, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 4});
}

}  // namespace tcfix
