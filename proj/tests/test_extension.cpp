#include <doctest.h>

#include <functional>
#include <string>

#include "fixtures.hpp"
#include "tanglecolor/error.hpp"
#include "tanglecolor/galex.hpp"
#include "tanglecolor/quandle.hpp"

using namespace tc;

namespace {

std::string kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

int unique_involution(const FiniteGroup& g) {
  int found = -1;
  for (int a = 1; a < g.order; ++a)
    if (element_order(g, a) == 2) {
      REQUIRE(found == -1);
      found = a;
    }
  REQUIRE(found > 0);
  return found;
}

}  // namespace

TEST_CASE("galex tables follow the defining law") {
  FiniteGroup z5 = tcfix::cyclic(5);
  GroupAutomorphism f = tcfix::power_auto(z5, 2);
  Quandle q = galex(z5, f, "g52");
  CHECK(q.order == 5);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) CHECK(q.at(x, y) == (2 * ((x - y + 5) % 5) + y) % 5);
  CHECK(is_connected(q));
  CHECK(is_faithful(q));

  FiniteGroup z3 = tcfix::cyclic(3);
  CHECK(galex(z3, tcfix::negate_auto(z3)).table == tcfix::r3().table);
}

TEST_CASE("classification by the fixed subgroup") {
  FiniteGroup z5 = tcfix::cyclic(5);
  ExtensionClass c1 = classify_extension(z5, tcfix::power_auto(z5, 2));
  CHECK(c1.kind == ExtensionClass::Faithful);
  CHECK(c1.fix.order() == 1);

  ExtensionClass c2 = classify_extension(tcfix::sl23(), tcfix::sl23_f4());
  CHECK(c2.kind == ExtensionClass::AbelianExtension);
  CHECK(c2.fix.order() == 4);

  tcfix::PermTable a5 = tcfix::alternating(5);
  GroupAutomorphism conj12 = tcfix::conj_auto(a5, Perm{1, 0, 2, 3, 4});
  ExtensionClass c3 = classify_extension(a5.group, conj12);
  CHECK(c3.kind == ExtensionClass::NonabelianExtension);
  CHECK(c3.fix.order() == 6);
}

TEST_CASE("coset quandle on the full fixed subgroup is the faithful image") {
  FiniteGroup g = tcfix::sl23();
  GroupAutomorphism f = tcfix::sl23_f4();
  Subgroup fix = fixed_subgroup(g, f);
  CosetQuandle cq = coset_quandle(g, fix, f, "base6");
  CHECK(cq.quandle.order == 6);
  CHECK(is_connected(cq.quandle));
  CHECK(is_faithful(cq.quandle));
  CHECK(cq.coset_of[0] == 0);
  CHECK(cq.reps[0] == 0);
  // the quotient map is exactly the inner image projection up to relabeling
  InnerImage img = inner_image_quandle(galex(g, f));
  CHECK(quandle_isomorphic(cq.quandle, img.base).has_value());
}

TEST_CASE("coset quandle rejects bad subgroups") {
  FiniteGroup g = tcfix::sl23();
  GroupAutomorphism f = tcfix::sl23_f4();
  // an element of order 3 cannot lie in Fix (Fix is cyclic of order 4)
  int c3 = -1;
  for (int a = 1; a < g.order && c3 < 0; ++a)
    if (element_order(g, a) == 3) c3 = a;
  REQUIRE(c3 > 0);
  Subgroup moved = subgroup_closure(g, {c3});
  CHECK(kind_of([&] { coset_quandle(g, moved, f); }) == "NotFixed");
  Subgroup fake;
  fake.elements = {0, c3};  // not closed under multiplication
  CHECK(kind_of([&] { coset_quandle(g, fake, f); }) == "NotASubgroup");
}

TEST_CASE("homogeneous quandle of a5 matches the transposition class of s5") {
  tcfix::PermTable a5 = tcfix::alternating(5);
  GroupAutomorphism conj12 = tcfix::conj_auto(a5, Perm{1, 0, 2, 3, 4});
  Subgroup fix = fixed_subgroup(a5.group, conj12);
  Quandle homog = homogeneous_quandle(a5.group, fix, conj12, "h10");
  CHECK(homog.order == 10);

  PermGroup s5(5, {Perm{1, 0, 2, 3, 4}, Perm{1, 2, 3, 4, 0}});
  ConjugationQuandle conj = conjugation_quandle(s5, Perm{1, 0, 2, 3, 4});
  CHECK(conj.quandle.order == 10);
  CHECK(quandle_isomorphic(homog, conj.quandle).has_value());
}

TEST_CASE("is_covering accepts quotients and rejects collapses") {
  Quandle q = tcfix::sl23_galex();
  InnerImage img = inner_image_quandle(q);
  CHECK(is_covering(img.map, q, img.base));

  Quandle r = tcfix::r3();
  Quandle point = validate_quandle("pt", 1, {0});
  std::vector<int> collapse(3, 0);
  CHECK_FALSE(is_covering(collapse, r, point));
  // wrong size map
  CHECK_FALSE(is_covering({0, 0}, r, point));
  // non-surjective map
  CHECK_FALSE(is_covering({0, 0, 0}, r, tcfix::dihedral_quandle(3)));
}

TEST_CASE("coset covering carries a free transitive deck action") {
  FiniteGroup g = tcfix::sl23();
  GroupAutomorphism f = tcfix::sl23_f4();
  Subgroup fix = fixed_subgroup(g, f);
  CosetCovering cc = coset_covering(g, f, fix, "cov");
  CHECK(cc.covering.total.order == 24);
  CHECK(cc.covering.base.order == 6);
  CHECK(cc.lambda.order == 4);
  CHECK(is_covering(cc.covering.map, cc.covering.total, cc.covering.base));
  CHECK(cc.section[0] == 0);
  for (int x = 0; x < cc.covering.base.order; ++x)
    CHECK(cc.covering.map[cc.section[x]] == x);
  // deck permutations realize left multiplication
  for (int l = 0; l < cc.lambda.order; ++l)
    for (int t = 0; t < 24; ++t) CHECK(cc.deck[l][t] == g.mul(cc.lambda_rep[l], t));
}

TEST_CASE("extracted cocycle satisfies both laws and rebuilds the total space") {
  FiniteGroup g = tcfix::sl23();
  GroupAutomorphism f = tcfix::sl23_f4();
  int minus_one = unique_involution(g);
  Subgroup lambda = make_subgroup(g, {0, minus_one});
  CosetCovering cc = coset_covering(g, f, lambda, "half");
  Cocycle phi = extract_cocycle(cc.covering, DeckAction{cc.lambda, cc.deck}, cc.section, "phi2");
  CHECK_FALSE(validate_cocycle(phi).has_value());
  for (int a = 0; a < phi.base.order; ++a) CHECK(phi.at(a, a) == 0);

  ExtensionQuandle ext = extension_quandle(phi, "ext2");
  CHECK(ext.quandle.order == 24);

  // explicit isomorphism (lambda, x) -> lambda * s(x) onto the total space
  std::vector<int> map(24, -1);
  for (int x = 0; x < phi.base.order; ++x)
    for (int l = 0; l < phi.coeff.order; ++l)
      map[ext.encode(l, x)] = g.mul(cc.lambda_rep[l], cc.section[x]);
  std::vector<bool> hit(24, false);
  for (int v : map) {
    REQUIRE(v >= 0);
    CHECK_FALSE(hit[v]);
    hit[v] = true;
  }
  const Quandle& total = cc.covering.total;
  for (int u = 0; u < 24; ++u)
    for (int v = 0; v < 24; ++v) CHECK(map[ext.quandle.at(u, v)] == total.at(map[u], map[v]));
}

TEST_CASE("trivial coefficient group gives back the base") {
  FiniteGroup z5 = tcfix::cyclic(5);
  GroupAutomorphism f = tcfix::power_auto(z5, 2);
  Subgroup triv = make_subgroup(z5, {0});
  CosetCovering cc = coset_covering(z5, f, triv, "id");
  CHECK(cc.covering.base.order == 5);
  Cocycle phi = extract_cocycle(cc.covering, DeckAction{cc.lambda, cc.deck}, cc.section, "phi0");
  for (int v : phi.table) CHECK(v == 0);
  CHECK(extension_quandle(phi).quandle.order == 5);
}

TEST_CASE("deck action validation catches broken actions") {
  FiniteGroup g = tcfix::sl23();
  GroupAutomorphism f = tcfix::sl23_f4();
  Subgroup fix = fixed_subgroup(g, f);
  CosetCovering cc = coset_covering(g, f, fix, "cov");

  // a coefficient group too small to sweep a fiber of size four
  FiniteGroup z2 = tcfix::cyclic(2);
  std::vector<Perm> trivial(2, perm_identity(24));
  CHECK(kind_of([&] {
          extract_cocycle(cc.covering, DeckAction{z2, trivial}, cc.section, "bad");
        }) == "ActionNotTransitiveOnFiber");

  // free but too small to sweep a fiber of size four
  int minus_one = unique_involution(g);
  std::vector<Perm> half_action;
  for (int a : {0, minus_one}) {
    Perm p(24);
    for (int t = 0; t < 24; ++t) p[t] = g.mul(a, t);
    half_action.push_back(std::move(p));
  }
  CHECK(kind_of([&] {
          extract_cocycle(cc.covering, DeckAction{z2, half_action}, cc.section, "bad");
        }) == "ActionNotTransitiveOnFiber");

  // right size but a kernel: the Klein group acting through the involution,
  // so two coefficients land on every total element
  FiniteGroup v4;
  v4.name = "v4";
  v4.order = 4;
  v4.table.assign(16, 0);
  v4.inverse.assign(4, 0);
  for (int a = 0; a < 4; ++a) {
    v4.inverse[a] = a;
    for (int b = 0; b < 4; ++b) v4.table[a * 4 + b] = a ^ b;
  }
  std::vector<Perm> through_involution;
  for (int l = 0; l < 4; ++l) through_involution.push_back(half_action[l & 1]);
  CHECK(kind_of([&] {
          extract_cocycle(cc.covering, DeckAction{v4, through_involution}, cc.section, "bad");
        }) == "ActionNotFree");

  // relabeling a generator as the involution is no homomorphism any more
  int involution_label = -1;
  for (int l = 1; l < cc.lambda.order; ++l)
    if (cc.lambda.mul(l, l) == 0) involution_label = l;
  REQUIRE(involution_label > 0);
  int generator_label = involution_label == 1 ? 2 : 1;
  std::vector<Perm> scrambled = cc.deck;
  std::swap(scrambled[generator_label], scrambled[involution_label]);
  CHECK(kind_of([&] {
          extract_cocycle(cc.covering, DeckAction{cc.lambda, scrambled}, cc.section, "bad");
        }) == "BadDeckAction");

  // a section leaving the fiber
  std::vector<int> section = cc.section;
  section[0] = cc.section[1];
  CHECK(kind_of([&] {
          extract_cocycle(cc.covering, DeckAction{cc.lambda, cc.deck}, section, "bad");
        }) == "BadSection");

  // a map that is no covering at all: move one element to a foreign fiber
  Covering broken = cc.covering;
  broken.map[0] = (broken.map[0] + 1) % broken.base.order;
  CHECK(kind_of([&] {
          extract_cocycle(broken, DeckAction{cc.lambda, cc.deck}, cc.section, "bad");
        }) == "NotACovering");
}

TEST_CASE("cocycle law violations are reported") {
  Quandle r = tcfix::r3();
  FiniteGroup z2 = tcfix::cyclic(2);
  Cocycle phi;
  phi.name = "hand";
  phi.base = r;
  phi.coeff = z2;
  phi.table.assign(9, 0);
  phi.section = {};
  CHECK_FALSE(validate_cocycle(phi).has_value());

  Cocycle bad_norm = phi;
  bad_norm.table[0] = 1;  // phi(0,0) != identity
  auto v1 = validate_cocycle(bad_norm);
  REQUIRE(v1.has_value());
  CHECK(v1->law == "Normalization");
  CHECK(v1->a == 0);

  Cocycle bad_id = phi;
  bad_id.table[0 * 3 + 1] = 1;  // phi(0,1) alone breaks the cocycle identity
  auto v2 = validate_cocycle(bad_id);
  REQUIRE(v2.has_value());
  CHECK(v2->law == "CocycleIdentity");

  CHECK(kind_of([&] { extension_quandle(bad_norm); }) == "InvalidCocycle");
}

TEST_CASE("extension by the zero cocycle splits off the coefficient") {
  Quandle r = tcfix::r3();
  FiniteGroup z2 = tcfix::cyclic(2);
  Cocycle phi;
  phi.name = "zero";
  phi.base = r;
  phi.coeff = z2;
  phi.table.assign(9, 0);
  ExtensionQuandle ext = extension_quandle(phi, "r3xz2");
  CHECK(ext.quandle.order == 6);
  CHECK_FALSE(is_connected(ext.quandle));  // the lambda part never moves
  for (int x = 0; x < 6; ++x) {
    CHECK(ext.encode(ext.lambda_part(x), ext.base_part(x)) == x);
    for (int y = 0; y < 6; ++y) {
      CHECK(ext.lambda_part(ext.quandle.at(x, y)) == ext.lambda_part(x));
      CHECK(ext.base_part(ext.quandle.at(x, y)) ==
            r.at(ext.base_part(x), ext.base_part(y)));
    }
  }
}

TEST_CASE("inn equivalence of the coset projection") {
  CHECK(inn_equivalence_check(tcfix::sl23(), tcfix::sl23_f4()));
  FiniteGroup z5 = tcfix::cyclic(5);
  CHECK(inn_equivalence_check(z5, tcfix::power_auto(z5, 2)));
  FiniteGroup z3 = tcfix::cyclic(3);
  CHECK(inn_equivalence_check(z3, tcfix::negate_auto(z3)));
}

TEST_CASE("galex criterion reconstructs generalized Alexander quandles") {
  GalexReconstruction r1 = galex_criterion(tcfix::r3());
  CHECK(r1.is_galex);
  REQUIRE(r1.group.has_value());
  CHECK(r1.group->order == 3);

  FiniteGroup z5 = tcfix::cyclic(5);
  GalexReconstruction r2 = galex_criterion(galex(z5, tcfix::power_auto(z5, 2), "g52"));
  CHECK(r2.is_galex);
  REQUIRE(r2.group.has_value());
  CHECK(r2.group->order == 5);
  // the reconstruction rebuilds an isomorphic copy by construction; verify
  // the returned pieces are consistent
  Quandle rebuilt = galex(*r2.group, *r2.f, "rebuilt");
  CHECK(quandle_isomorphic(rebuilt, galex(z5, tcfix::power_auto(z5, 2))).has_value());

  // the transposition class of s4 is connected but not generalized Alexander
  PermGroup s4(4, {Perm{1, 0, 2, 3}, Perm{1, 2, 3, 0}});
  ConjugationQuandle cq = conjugation_quandle(s4, Perm{1, 0, 2, 3});
  CHECK_FALSE(galex_criterion(cq.quandle).is_galex);

  CHECK(kind_of([] { galex_criterion(tcfix::dihedral_quandle(4)); }) == "NotConnected");
}

TEST_CASE("conjugate automorphisms give isomorphic galex quandles") {
  FiniteGroup q8 = tcfix::quaternion8();
  AutomorphismSet aut = enumerate_automorphisms(q8);
  REQUIRE(aut.autos.size() == 24);
  // a deterministic sample of (f, g) pairs
  for (std::size_t fi : {1u, 5u, 11u}) {
    for (std::size_t gi : {3u, 17u}) {
      const GroupAutomorphism& f = aut.autos[fi];
      const GroupAutomorphism& g = aut.autos[gi];
      GroupAutomorphism fc =
          automorphism_compose(automorphism_compose(automorphism_inverse(g), f), g);
      CHECK(quandle_isomorphic(galex(q8, f), galex(q8, fc)).has_value());
    }
  }
}

TEST_CASE("powers two and three of z5 give non-isomorphic quandles") {
  FiniteGroup z5 = tcfix::cyclic(5);
  Quandle a = galex(z5, tcfix::power_auto(z5, 2), "g52");
  Quandle b = galex(z5, tcfix::power_auto(z5, 3), "g53");
  CHECK_FALSE(quandle_isomorphic(a, b).has_value());
}
