#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tanglecolor/finite_group.hpp"
#include "tanglecolor/quandle.hpp"

namespace tc {

// Generalized Alexander quandle on the elements of G: x * y = f(x y^-1) y.
// Labels coincide with the group labels; always a quandle by construction.
Quandle galex(const FiniteGroup& g, const GroupAutomorphism& f, std::string name = "");

// Coset quandle on right cosets of H <= Fix(G, f):
// Ha * Hb = H f(a b^-1) b.  Cosets are labeled ascending by their minimal
// element, so the coset of the identity gets label 1.  Throws NotFixed(h)
// when some h in H moves under f, NotASubgroup when H is not one.
struct CosetQuandle {
  Quandle quandle;
  std::vector<int> coset_of;  // group element -> coset index
  std::vector<int> reps;      // coset index -> minimal representative
};
CosetQuandle coset_quandle(const FiniteGroup& g, const Subgroup& h, const GroupAutomorphism& f,
                           std::string name = "");

// Spec-shaped wrapper returning just the table.
Quandle homogeneous_quandle(const FiniteGroup& g, const Subgroup& h, const GroupAutomorphism& f,
                            std::string name = "");

// Surjective quandle map p with p(x) = p(y) implying a*x = a*y for all a.
struct Covering {
  Quandle total;
  Quandle base;
  std::vector<int> map;  // total element -> base element
};

bool is_covering(const std::vector<int>& map, const Quandle& total, const Quandle& base);

// The covering GAlex(G, f) -> coset quandle on Lambda\G sending g to its
// coset, for Lambda <= Fix(G, f).  Left multiplication by Lambda is its deck
// action: free and transitive on every fiber.
struct CosetCovering {
  Covering covering;
  FiniteGroup lambda;            // Lambda as an abstract group, identity first
  std::vector<int> lambda_rep;   // lambda index -> parent group element
  std::vector<Perm> deck;        // lambda index -> permutation of total elements
  std::vector<int> section;      // base element -> minimal total element in its fiber
};
CosetCovering coset_covering(const FiniteGroup& g, const GroupAutomorphism& f,
                             const Subgroup& lambda, std::string name = "");

// Left action of a coefficient group on the total space of a covering.
// perms[l] is the action of the element with index l; the action must be a
// homomorphism, fiber-preserving, commute with all right translations, and
// be free and transitive on each fiber (checked by extract_cocycle).
struct DeckAction {
  FiniteGroup group;
  std::vector<Perm> perms;
};

// 2-cocycle phi : X x X -> Lambda with phi(a,a) = 1 and the quandle cocycle
// identity.  Stores the section it was extracted through (empty for
// hand-made tables).
struct Cocycle {
  std::string name;
  Quandle base;
  FiniteGroup coeff;
  std::vector<int> table;    // |X|^2 coefficient indices
  std::vector<int> section;  // |X| total-space elements, metadata only

  int at(int a, int b) const { return table[a * base.order + b]; }
};

struct CocycleViolation {
  std::string law;  // "Normalization" or "CocycleIdentity"
  int a = 0, b = 0, c = 0;
};

// nullopt when phi satisfies both cocycle laws
std::optional<CocycleViolation> validate_cocycle(const Cocycle& phi);

// Reads the cocycle off a covering through a section: s(x) * s(y) =
// phi(x,y) . s(x*y).  Validates the covering, the deck action (free,
// transitive, commuting with right translations) and the section.
// Error kinds: NotACovering, BadDeckAction, ActionNotFree,
// ActionNotTransitiveOnFiber, BadSection.
Cocycle extract_cocycle(const Covering& cov, const DeckAction& action,
                        const std::vector<int>& section, std::string name = "");

// Extension quandle on Lambda x X with (l,a)*(m,b) = (l phi(a,b), a*b).
// Element index = x * |Lambda| + l, so (identity, x0=0) is element 0.
// Throws InvalidCocycle when phi fails validation.
struct ExtensionQuandle {
  Quandle quandle;
  Cocycle cocycle;

  int encode(int lambda, int x) const { return x * cocycle.coeff.order + lambda; }
  int lambda_part(int idx) const { return idx % cocycle.coeff.order; }
  int base_part(int idx) const { return idx / cocycle.coeff.order; }
};
ExtensionQuandle extension_quandle(const Cocycle& phi, std::string name = "");

// Structure verdict for a connected GAlex(G, f), by its fixed subgroup.
struct ExtensionClass {
  enum Kind { Faithful, AbelianExtension, NonabelianExtension } kind;
  Subgroup fix;
};
ExtensionClass classify_extension(const FiniteGroup& g, const GroupAutomorphism& f);

// Verifies that R_g -> Fix(G,f) g is a well-defined quandle isomorphism
// from the inner image of GAlex(G, f) onto the coset quandle; a failure is
// an implementation bug and throws Internal with the offending pair.
bool inn_equivalence_check(const FiniteGroup& g, const GroupAutomorphism& f);

// Decides whether a connected quandle is generalized Alexander: true iff
// |Q| equals the order of the commutator subgroup D of Inn(Q), in which
// case Q is rebuilt as GAlex(D, conjugation by R_e) and the isomorphism
// g -> g(e) is verified elementwise.
struct GalexReconstruction {
  bool is_galex = false;
  std::optional<FiniteGroup> group;
  std::optional<GroupAutomorphism> f;
};
GalexReconstruction galex_criterion(const Quandle& q,
                                    std::size_t bound = kEnumerationBound);

}  // namespace tc
