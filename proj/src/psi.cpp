#include "tanglecolor/psi.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace tc {

std::vector<int> propagate(const Quandle& q, const BraidWord& b, std::vector<int> top) {
  if (static_cast<int>(top.size()) != b.strands)
    throw Error("BadTuple", "expected one color per strand");
  for (int v : top)
    if (v < 0 || v >= q.order) throw Error("BadTuple", "color out of range");
  for (int letter : b.letters) {
    int i = std::abs(letter) - 1;
    int a = top[i], c = top[i + 1];
    if (letter > 0) {
      top[i] = c;
      top[i + 1] = q.at(a, c);
    } else {
      top[i] = star_inv(q, c, a);
      top[i + 1] = a;
    }
  }
  return top;
}

namespace {

constexpr int kUnset = -1;

// Shared backtracking engine for closure-coloring counts, tangle counts and
// cocycle state sums.  Strand colors are assigned lazily: a top color is
// chosen only when a crossing first consumes it, and the closure constraint
// of a position fires as soon as its bottom color is final, so dead branches
// die early.  Positions and colors are 0-based.
struct Search {
  const Quandle& q;
  const BraidWord& b;
  bool open_first = false;        // tangle mode: position 0 has no closure constraint
  const Cocycle* weight = nullptr;  // when set, accumulate the state-sum weight

  std::vector<int> inv;                          // inv[c*n + a]: the x with x*a = c
  std::vector<int> last_touch;                   // per position; -1 = untouched
  std::vector<std::vector<int>> origin_before;   // per letter: position -> top strand
  std::vector<std::vector<int>> pos_after;       // per letter: top strand -> position
  std::vector<int> origin_final;                 // after the whole word

  // complete branch: bottom color of position 0 (tangle mode), number of
  // fully free strand cycles, accumulated weight
  std::function<void(int, int, int)> emit;

  struct State {
    std::vector<int> cur;  // color at each position, kUnset while unknown
    std::vector<int> top;  // chosen top color per strand, kUnset while free
  };
  // one scratch pair per recursion depth, so branch copies reuse capacity
  mutable std::vector<State> scratch1, scratch2;

  explicit Search(const Quandle& q_, const BraidWord& b_) : q(q_), b(b_) {
    int n = q.order;
    inv.assign(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
      for (int x = 0; x < n; ++x) inv[static_cast<std::size_t>(q.at(x, a)) * n + a] = x;

    int s = b.strands;
    last_touch.assign(s, -1);
    Perm origin = perm_identity(s);
    origin_before.reserve(b.letters.size());
    pos_after.reserve(b.letters.size());
    for (int k = 0; k < static_cast<int>(b.letters.size()); ++k) {
      int i = std::abs(b.letters[k]) - 1;
      last_touch[i] = k;
      last_touch[i + 1] = k;
      origin_before.push_back(origin);
      std::swap(origin[i], origin[i + 1]);
      pos_after.push_back(perm_inverse(origin));
    }
    origin_final = origin;
  }

  bool closed(int p) const { return !(open_first && p == 0); }

  // Record that the closure forces top strand p to color c (the bottom of
  // position p is final).  Cascades into the strand's current position.
  bool close_position(State& st, int p, int k) const {
    int c = st.cur[p];
    if (st.top[p] != kUnset) return st.top[p] == c;
    st.top[p] = c;
    int pos = pos_after[k][p];
    if (st.cur[pos] == kUnset) {
      st.cur[pos] = c;
      if (last_touch[pos] <= k && closed(pos)) return close_position(st, pos, k);
    }
    return true;
  }

  // choose a color for the strand currently at position p (first use)
  bool assign_top(State& st, int p, int color, int k) const {
    int t = origin_before[k][p];
    st.top[t] = color;
    st.cur[p] = color;
    // if the strand's own bottom position is already final, check closure now
    if (closed(t) && last_touch[t] < k && st.cur[t] != kUnset) return st.cur[t] == color;
    return true;
  }

  void run(int fixed_top0) {
    State st;
    st.cur.assign(b.strands, kUnset);
    st.top.assign(b.strands, kUnset);
    if (fixed_top0 >= 0) {
      st.top[0] = fixed_top0;
      st.cur[0] = fixed_top0;
    }
    scratch1.assign(b.letters.size(), State{});
    scratch2.assign(b.letters.size(), State{});
    rec(st, 0, 0);
  }

  void rec(const State& st, int k, int w) const {
    if (k == static_cast<int>(b.letters.size())) {
      finish(st, w);
      return;
    }
    int letter = b.letters[k];
    int i = std::abs(letter) - 1;
    bool u1 = st.cur[i] == kUnset, u2 = st.cur[i + 1] == kUnset;
    int n = q.order;
    for (int c1 = 0; c1 < (u1 ? n : 1); ++c1) {
      State& s1 = scratch1[k];
      s1 = st;
      if (u1 && !assign_top(s1, i, c1, k)) continue;
      for (int c2 = 0; c2 < (u2 && s1.cur[i + 1] == kUnset ? n : 1); ++c2) {
        State& s2 = scratch2[k];
        s2 = s1;
        if (s2.cur[i + 1] == kUnset && !assign_top(s2, i + 1, c2, k)) continue;
        int a = s2.cur[i], c = s2.cur[i + 1];
        int w2 = w;
        if (letter > 0) {
          if (weight) w2 = weight->coeff.mul(w2, weight->at(a, c));
          s2.cur[i] = c;
          s2.cur[i + 1] = q.at(a, c);
        } else {
          int cp = inv[static_cast<std::size_t>(c) * n + a];
          if (weight) w2 = weight->coeff.mul(w2, weight->coeff.inv(weight->at(cp, a)));
          s2.cur[i] = cp;
          s2.cur[i + 1] = a;
        }
        bool ok = true;
        for (int p : {i, i + 1})
          if (last_touch[p] == k && closed(p) && !close_position(s2, p, k)) {
            ok = false;
            break;
          }
        if (ok) rec(s2, k + 1, w2);
      }
    }
  }

  void finish(const State& st0, int w) const {
    State st = st0;
    int s = b.strands;
    // settle remaining closure constraints to a fixpoint
    bool changed = true;
    while (changed) {
      changed = false;
      for (int p = 0; p < s; ++p) {
        if (closed(p) && st.cur[p] != kUnset) {
          if (st.top[p] == kUnset) {
            st.top[p] = st.cur[p];
            changed = true;
          } else if (st.top[p] != st.cur[p]) {
            return;  // closure violated
          }
        }
        if (st.cur[p] == kUnset && st.top[origin_final[p]] != kUnset) {
          st.cur[p] = st.top[origin_final[p]];
          changed = true;
        }
      }
    }
    // strands never consumed anywhere: whole permutation cycles stay free,
    // each contributing a factor of |Q|
    int free_cycles = 0;
    std::vector<char> visited(s, 0);
    for (int p = 0; p < s; ++p) {
      if (visited[p] || st.cur[p] != kUnset) continue;
      ++free_cycles;
      for (int j = p; !visited[j]; j = origin_final[j]) {
        visited[j] = 1;
        if (st.cur[j] != kUnset || (closed(j) && st.top[j] != kUnset))
          throw Error("Internal", "mixed resolved/free closure cycle survived the fixpoint");
      }
    }
    int bottom0 = kUnset;
    if (open_first) {
      bottom0 = st.cur[0];
      if (bottom0 == kUnset) throw Error("Internal", "open strand finished without a color");
    }
    emit(bottom0, free_cycles, w);
  }
};

long long pow_ll(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

long long closure_coloring_count(const Quandle& q, const BraidWord& b) {
  Search search(q, b);
  long long total = 0;
  search.emit = [&](int, int free_cycles, int) { total += pow_ll(q.order, free_cycles); };
  if (is_connected(q)) {
    search.run(0);
    return total * q.order;  // transitivity: every pinned top color counts alike
  }
  search.run(-1);
  return total;
}

PsiVector psi(const Quandle& q, int base, const BraidWord& b) {
  if (base < 0 || base >= q.order) throw Error("BadElement", "base element out of range");
  if (!is_connected(q)) throw Error("NotConnected", "psi needs a connected quandle");
  PsiVector out;
  out.quandle_name = q.name;
  out.knot_name = b.name;
  out.fib = fiber(q, base);
  out.counts.assign(out.fib.elements.size(), 0);

  Search search(q, b);
  search.open_first = true;
  search.emit = [&](int bottom0, int free_cycles, int) {
    int pos = out.fib.position_of(bottom0);
    if (pos < 0)
      throw Error("Internal", "bottom end escaped the fiber of the base");  // end-arc law
    out.counts[pos] += pow_ll(q.order, free_cycles);
  };
  search.run(base);
  return out;
}

GroupRingElement conjugate(const GroupRingElement& v) {
  GroupRingElement out{v.coeff, std::vector<long long>(v.coeffs.size(), 0)};
  for (int l = 0; l < v.coeff.order; ++l) out.coeffs[v.coeff.inv(l)] = v.coeffs[l];
  return out;
}

std::string to_string(const GroupRingElement& v) {
  std::string s;
  for (std::size_t i = 0; i < v.coeffs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v.coeffs[i]);
  }
  return s;
}

GroupRingElement phi_state_sum(const Quandle& x, const Cocycle& phi, const BraidWord& b) {
  if (!(x == phi.base)) throw Error("BaseMismatch", "state sum quandle differs from cocycle base");
  if (!is_abelian(phi.coeff))
    throw Error("NonAbelianCoefficients", "state sums need an abelian coefficient group");
  if (auto v = validate_cocycle(phi))
    throw Error("InvalidCocycle", v->law + " fails");

  GroupRingElement out{phi.coeff, std::vector<long long>(phi.coeff.order, 0)};
  Search search(x, b);
  search.weight = &phi;
  search.emit = [&](int, int free_cycles, int w) {
    out.coeffs[w] += pow_ll(x.order, free_cycles);
  };
  search.run(-1);
  return out;
}

GroupRingElement phi_from_psi(const PsiVector& v, const ExtensionQuandle& ext) {
  int nl = ext.cocycle.coeff.order;
  if (ext.lambda_part(v.fib.base) != 0)
    throw Error("BadBase", "transport needs base (identity, x0)");
  int x0 = ext.base_part(v.fib.base);
  // inn-equivalence of the projection: the fiber is exactly Lambda x {x0}
  if (static_cast<int>(v.fib.elements.size()) != nl)
    throw Error("ProjectionNotInnEquivalent",
                "fiber size " + std::to_string(v.fib.elements.size()) +
                    " differs from coefficient order " + std::to_string(nl));
  std::vector<char> seen(nl, 0);
  for (int e : v.fib.elements) {
    if (ext.base_part(e) != x0)
      throw Error("ProjectionNotInnEquivalent", "fiber leaves the base point's column");
    seen[ext.lambda_part(e)] = 1;
  }
  for (char c : seen)
    if (!c) throw Error("ProjectionNotInnEquivalent", "fiber misses a coefficient");

  GroupRingElement out{ext.cocycle.coeff, std::vector<long long>(nl, 0)};
  long long scale = ext.cocycle.base.order;
  for (std::size_t i = 0; i < v.fib.elements.size(); ++i)
    out.coeffs[ext.lambda_part(v.fib.elements[i])] = scale * v.counts[i];
  return out;
}

SymmetryReport symmetry_report(const Quandle& q, int base, const BraidWord& b) {
  SymmetryReport rep;
  rep.k = psi(q, base, b);
  rep.m = psi(q, base, mirror(b));
  rep.r = psi(q, base, reversed(b));
  rep.rm = psi(q, base, reverse_mirror(b));

  // reversal law: psi(rm)[j] = psi[p(j)]
  std::vector<int> p = end_permutation(q, base);
  for (std::size_t j = 0; j < p.size(); ++j)
    if (rep.rm.counts[j] != rep.k.counts[p[j]])
      throw Error("Internal", "reversal law failed at fiber position " + std::to_string(j + 1));

  if (rep.m.counts != rep.k.counts) rep.distinguished.push_back("m");
  if (rep.r.counts != rep.k.counts) rep.distinguished.push_back("r");
  if (rep.rm.counts != rep.k.counts) rep.distinguished.push_back("rm");
  return rep;
}

}  // namespace tc
