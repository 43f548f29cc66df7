#include "tanglecolor/galex.hpp"

#include <algorithm>
#include <unordered_map>

namespace tc {

namespace {
std::string lbl(int a) { return std::to_string(a + 1); }
}

Quandle galex(const FiniteGroup& g, const GroupAutomorphism& f, std::string name) {
  int n = g.order;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x * n + y] = g.mul(f.images[g.mul(x, g.inv(y))], y);
  Quandle q;
  q.name = name.empty() ? "galex(" + g.name + ")" : std::move(name);
  q.order = n;
  q.table = std::move(table);
  return q;  // a quandle for any automorphism; validated in tests, not here
}

CosetQuandle coset_quandle(const FiniteGroup& g, const Subgroup& h, const GroupAutomorphism& f,
                           std::string name) {
  make_subgroup(g, h.elements);  // throws NotASubgroup on garbage
  for (int x : h.elements)
    if (f.images[x] != x) throw Error("NotFixed", "subgroup element " + lbl(x) + " moves under f");

  int n = g.order;
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int a = 0; a < n; ++a) {
    if (coset_of[a] != -1) continue;
    // scanning ascending, a is the minimal element of its right coset H a
    int idx = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int x : h.elements) coset_of[g.mul(x, a)] = idx;
  }
  int m = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      table[a * m + b] = coset_of[g.mul(f.images[g.mul(reps[a], g.inv(reps[b]))], reps[b])];

  CosetQuandle out;
  out.quandle = validate_quandle(
      name.empty() ? "cosets(" + g.name + ")" : std::move(name), m, std::move(table));
  out.coset_of = std::move(coset_of);
  out.reps = std::move(reps);
  return out;
}

Quandle homogeneous_quandle(const FiniteGroup& g, const Subgroup& h, const GroupAutomorphism& f,
                            std::string name) {
  return coset_quandle(g, h, f, std::move(name)).quandle;
}

bool is_covering(const std::vector<int>& map, const Quandle& total, const Quandle& base) {
  if (static_cast<int>(map.size()) != total.order) return false;
  std::vector<char> hit(base.order, 0);
  for (int v : map) {
    if (v < 0 || v >= base.order) return false;
    hit[v] = 1;
  }
  for (char h : hit)
    if (!h) return false;  // not surjective
  for (int x = 0; x < total.order; ++x)
    for (int y = 0; y < total.order; ++y)
      if (map[total.at(x, y)] != base.at(map[x], map[y])) return false;
  // covering law: equal images act equally on everything
  for (int x = 0; x < total.order; ++x)
    for (int y = x + 1; y < total.order; ++y) {
      if (map[x] != map[y]) continue;
      for (int a = 0; a < total.order; ++a)
        if (total.at(a, x) != total.at(a, y)) return false;
    }
  return true;
}

CosetCovering coset_covering(const FiniteGroup& g, const GroupAutomorphism& f,
                             const Subgroup& lambda, std::string name) {
  CosetCovering out;
  Quandle total = galex(g, f, name.empty() ? "" : name + "~total");
  CosetQuandle base = coset_quandle(g, lambda, f, name.empty() ? "" : name);

  SubgroupAsGroup lam = subgroup_as_group(g, lambda, "lambda");
  out.lambda = std::move(lam.group);
  out.lambda_rep = std::move(lam.rep);

  out.deck.reserve(out.lambda.order);
  for (int l = 0; l < out.lambda.order; ++l) {
    Perm p(g.order);
    for (int x = 0; x < g.order; ++x) p[x] = g.mul(out.lambda_rep[l], x);
    out.deck.push_back(std::move(p));
  }

  out.section.assign(base.quandle.order, -1);
  for (int x = g.order - 1; x >= 0; --x) out.section[base.coset_of[x]] = x;  // minimal wins

  out.covering = Covering{std::move(total), std::move(base.quandle), std::move(base.coset_of)};
  if (!is_covering(out.covering.map, out.covering.total, out.covering.base))
    throw Error("Internal", "coset projection failed the covering law");
  return out;
}

std::optional<CocycleViolation> validate_cocycle(const Cocycle& phi) {
  int n = phi.base.order;
  for (int a = 0; a < n; ++a)
    if (phi.at(a, a) != 0) return CocycleViolation{"Normalization", a, a, 0};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int lhs = phi.coeff.mul(phi.at(a, b), phi.at(phi.base.at(a, b), c));
        int rhs = phi.coeff.mul(phi.at(a, c), phi.at(phi.base.at(a, c), phi.base.at(b, c)));
        if (lhs != rhs) return CocycleViolation{"CocycleIdentity", a, b, c};
      }
  return std::nullopt;
}

Cocycle extract_cocycle(const Covering& cov, const DeckAction& action,
                        const std::vector<int>& section, std::string name) {
  const Quandle& total = cov.total;
  const Quandle& base = cov.base;
  int nt = total.order, nb = base.order, nl = action.group.order;

  if (!is_covering(cov.map, total, base))
    throw Error("NotACovering", "projection fails the covering law");

  if (static_cast<int>(section.size()) != nb) throw Error("BadSection", "wrong length");
  for (int x = 0; x < nb; ++x) {
    int s = section[x];
    if (s < 0 || s >= nt || cov.map[s] != x)
      throw Error("BadSection", "section misses fiber of base element " + lbl(x));
  }

  if (static_cast<int>(action.perms.size()) != nl)
    throw Error("BadDeckAction", "one permutation per coefficient element required");
  for (const Perm& p : action.perms)
    if (static_cast<int>(p.size()) != nt || !is_permutation(p))
      throw Error("BadDeckAction", "action entry is not a permutation of the total space");
  if (!perm_is_identity(action.perms[0]))
    throw Error("BadDeckAction", "identity must act trivially");
  for (int l = 0; l < nl; ++l)
    for (int m = 0; m < nl; ++m)
      // left action: applying m then l realizes l*m
      if (perm_compose(action.perms[m], action.perms[l]) != action.perms[action.group.mul(l, m)])
        throw Error("BadDeckAction",
                    "not a left action at pair (" + lbl(l) + "," + lbl(m) + ")");
  for (int l = 0; l < nl; ++l)
    for (int x = 0; x < nt; ++x)
      if (cov.map[action.perms[l][x]] != cov.map[x])
        throw Error("BadDeckAction", "element " + lbl(l) + " does not preserve fibers");
  for (int l = 0; l < nl; ++l)
    for (int x = 0; x < nt; ++x)
      for (int y = 0; y < nt; ++y)
        if (action.perms[l][total.at(x, y)] != total.at(action.perms[l][x], y))
          throw Error("BadDeckAction",
                      "element " + lbl(l) + " does not commute with right translations");

  // free and transitive on each fiber; record lambda_of on the way
  std::vector<int> fiber_size(nb, 0);
  for (int x = 0; x < nt; ++x) ++fiber_size[cov.map[x]];
  std::vector<int> lambda_of(nt, -1);
  for (int x = 0; x < nb; ++x) {
    if (fiber_size[x] != nl)
      throw Error("ActionNotTransitiveOnFiber",
                  "fiber of base element " + lbl(x) + " has size " +
                      std::to_string(fiber_size[x]) + ", coefficient group has order " +
                      std::to_string(nl));
    int y0 = section[x];
    for (int l = 0; l < nl; ++l) {
      int y = action.perms[l][y0];
      if (lambda_of[y] != -1)
        throw Error("ActionNotFree", "two coefficients reach total element " + lbl(y));
      lambda_of[y] = l;
    }
  }
  for (int y = 0; y < nt; ++y)
    if (lambda_of[y] == -1)
      throw Error("ActionNotTransitiveOnFiber",
                  "total element " + lbl(y) + " unreachable from the section");

  Cocycle phi;
  phi.name = name.empty() ? base.name + "~cocycle" : std::move(name);
  phi.base = base;
  phi.coeff = action.group;
  phi.section = section;
  phi.table.assign(static_cast<std::size_t>(nb) * nb, -1);
  for (int x = 0; x < nb; ++x)
    for (int y = 0; y < nb; ++y) {
      int t = total.at(section[x], section[y]);
      phi.table[x * nb + y] = lambda_of[t];  // t = phi(x,y) . s(x*y) by construction
    }
  if (auto v = validate_cocycle(phi))
    throw Error("Internal", "extracted table fails the " + v->law + " law");
  return phi;
}

ExtensionQuandle extension_quandle(const Cocycle& phi, std::string name) {
  if (auto v = validate_cocycle(phi))
    throw Error("InvalidCocycle", v->law + " fails at (" + lbl(v->a) + "," + lbl(v->b) +
                                      (v->law == "CocycleIdentity" ? "," + lbl(v->c) : "") + ")");
  int nl = phi.coeff.order, nx = phi.base.order;
  int n = nl * nx;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < nx; ++x)
    for (int l = 0; l < nl; ++l)
      for (int y = 0; y < nx; ++y)
        for (int m = 0; m < nl; ++m) {
          int src = x * nl + l, arg = y * nl + m;
          table[static_cast<std::size_t>(src) * n + arg] =
              phi.base.at(x, y) * nl + phi.coeff.mul(l, phi.at(x, y));
        }
  ExtensionQuandle out;
  out.quandle = validate_quandle(
      name.empty() ? phi.name + "~ext" : std::move(name), n, std::move(table));
  out.cocycle = phi;

  std::vector<int> proj(n);
  for (int i = 0; i < n; ++i) proj[i] = out.base_part(i);
  if (!is_covering(proj, out.quandle, phi.base))
    throw Error("Internal", "extension projection failed the covering law");
  return out;
}

ExtensionClass classify_extension(const FiniteGroup& g, const GroupAutomorphism& f) {
  Quandle q = galex(g, f);
  if (!is_connected(q)) throw Error("NotConnected", "classification needs a connected quandle");
  Subgroup fix = fixed_subgroup(g, f);
  ExtensionClass out{ExtensionClass::Faithful, fix};
  if (fix.order() == 1)
    out.kind = ExtensionClass::Faithful;
  else if (is_abelian(g, fix))
    out.kind = ExtensionClass::AbelianExtension;
  else
    out.kind = ExtensionClass::NonabelianExtension;
  return out;
}

bool inn_equivalence_check(const FiniteGroup& g, const GroupAutomorphism& f) {
  Quandle q = galex(g, f);
  InnerImage inn = inner_image_quandle(q);
  Subgroup fix = fixed_subgroup(g, f);
  CosetQuandle cosets = coset_quandle(g, fix, f);

  // tau: column of x -> coset Fix x.  Well-defined and injective iff the
  // two partitions coincide elementwise.
  int m = inn.base.order;
  if (m != cosets.quandle.order)
    throw Error("Internal", "inner image and coset space have different sizes");
  std::vector<int> tau(m, -1);
  for (int x = 0; x < g.order; ++x) {
    int c = inn.map[x], h = cosets.coset_of[x];
    if (tau[c] == -1)
      tau[c] = h;
    else if (tau[c] != h)
      throw Error("Internal", "columns of one fiber land in two cosets at element " + lbl(x));
  }
  std::vector<char> hit(m, 0);
  for (int c = 0; c < m; ++c) {
    if (tau[c] == -1 || hit[tau[c]])
      throw Error("Internal", "coset correspondence is not a bijection");
    hit[tau[c]] = 1;
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (tau[inn.base.at(a, b)] != cosets.quandle.at(tau[a], tau[b]))
        throw Error("Internal",
                    "coset correspondence breaks products at (" + lbl(a) + "," + lbl(b) + ")");
  return true;
}

GalexReconstruction galex_criterion(const Quandle& q, std::size_t bound) {
  if (!is_connected(q)) throw Error("NotConnected", "criterion applies to connected quandles");
  InnerGroup inn = inner_group(q);
  PermGroup derived = derived_subgroup(inn.group, bound);
  GalexReconstruction out;
  if (derived.order() != static_cast<std::uint64_t>(q.order)) return out;

  // cross-check: the derived subgroup acts with trivial stabilizers
  std::vector<Perm> elems = enumerate_elements(derived, bound);
  int e = 0;
  for (const Perm& p : elems)
    if (p[e] == e && !perm_is_identity(p))
      throw Error("Internal", "derived subgroup of matching order has a nontrivial stabilizer");

  if (static_cast<int>(elems.size()) > kMaxTableOrder)
    throw Error("GroupTooLarge", "reconstructed group exceeds the Cayley-table bound");

  // the identity is the lexicographic minimum, so it already holds index 0
  if (!perm_is_identity(elems.front()))
    throw Error("Internal", "identity not first in sorted element listing");

  std::unordered_map<Perm, int, PermHash> index;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) index.emplace(elems[i], i);
  int n = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a * n + b] = index.at(perm_compose(elems[a], elems[b]));
  FiniteGroup g = validate_group("inn'(" + q.name + ")", n, std::move(table));

  const Perm& re = inn.translations[e];
  Perm re_inv = perm_inverse(re);
  std::vector<int> images(n);
  for (int a = 0; a < n; ++a) {
    auto it = index.find(perm_compose(perm_compose(re_inv, elems[a]), re));
    if (it == index.end()) throw Error("Internal", "derived subgroup is not normalized by R_e");
    images[a] = it->second;
  }
  GroupAutomorphism f = automorphism_from_images(g, std::move(images));

  // explicit isomorphism g -> g(e) from GAlex(D, f) onto q, elementwise
  std::vector<int> psi(n);
  std::vector<char> hit(q.order, 0);
  for (int a = 0; a < n; ++a) {
    psi[a] = elems[a][e];
    if (hit[psi[a]]) throw Error("Internal", "reconstruction map is not injective");
    hit[psi[a]] = 1;
  }
  Quandle rebuilt = galex(g, f);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (psi[rebuilt.at(a, b)] != q.at(psi[a], psi[b]))
        throw Error("Internal", "reconstruction map breaks products");

  out.is_galex = true;
  out.group = std::move(g);
  out.f = std::move(f);
  return out;
}

}  // namespace tc
