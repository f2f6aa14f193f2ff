#pragma once

#include <optional>

#include "alcove/bruhat.hpp"
#include "alcove/iwahori_weyl.hpp"

namespace alcove {

// the distinguished minuscule cocharacter (1, 0, ..., 0)
inline IntVec unit_cochar(const GroupCtx& ctx) { return basis(ctx.rank, 1); }

// pluggable hull membership test, so callers can swap in the reference
// implementation (the CLI's --oracle mode does)
using HullTest = std::function<bool(const GroupCtx&, const IntVec&, const RatVec&)>;

inline bool hull_contains(const HullTest& hull, const GroupCtx& ctx, const IntVec& mu,
                          const RatVec& x) {
  return hull ? hull(ctx, mu, x) : in_convex_hull(ctx, mu, x);
}

// The admissible set: all w lying below some translation t_{mu'}, mu' in the
// Weyl orbit of mu.  Enumerated by filtering the ball of radius length(t_mu)
// around the coset of t_mu.
inline std::set<IWElement> admissible_set(const GroupCtx& ctx, const IntVec& mu,
                                          Int guard = 12) {
  IWElement tmu = IWElement::translation(ctx, mu);
  std::vector<IWElement> targets;
  Int radius = 0;
  for (const IntVec& m : weyl_orbit(ctx, mu)) {
    targets.push_back(IWElement::translation(ctx, m));
    radius = std::max(radius, length(targets.back()));
  }
  std::set<IWElement> out;
  for (const IWElement& w : ball(ctx, radius, tmu, guard))
    for (const IWElement& tgt : targets)
      if (bruhat_leq(w, tgt)) {
        out.insert(w);
        break;
      }
  return out;
}

// The defining test for mu-permissibility: w must lie in the W_a-coset of
// t_mu and move every point of the base alcove by a vector inside
// Conv(W mu).  The movement wa - a is affine in a, so testing the vertices
// (facet representatives for TypeA, whose alcove is a prism) suffices.
inline bool is_permissible_def(const IWElement& w, const IntVec& mu, const HullTest& hull = {}) {
  const GroupCtx& ctx = w.ctx;
  if (static_cast<int>(mu.size()) != ctx.rank)
    throw std::invalid_argument("is_permissible_def: length mismatch");
  if (!same_wa_coset(w, IWElement::translation(ctx, mu))) return false;
  for (const RatVec& a : ctx.alcove_vertices())
    if (!hull_contains(hull, ctx, mu, sub(w.apply(a), a))) return false;
  return true;
}

// offset == e_a - e_b for some a != b?  (the S_{2n}-orbit of the embedded
// unit cocharacter); when require_star, additionally b == a*
inline bool is_unit_difference(const IntVec& m, bool require_star) {
  int plus = 0, minus = 0;
  for (size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 1 && plus == 0)
      plus = static_cast<int>(k) + 1;
    else if (m[k] == -1 && minus == 0)
      minus = static_cast<int>(k) + 1;
    else if (m[k] != 0)
      return false;
  }
  if (plus == 0 || minus == 0) return false;
  return !require_star || minus == star_index(plus, static_cast<int>(m.size()));
}

// Permissibility for the cocharacter (1, 0^(n-1)), read off the extended
// alcove: every column offset is 0 or some e_a - e_b, and the offsets at
// positions 0 and n (even case) resp. position 0 (odd case) have the
// antisymmetric form e_a - e_{a*}.  Equivalent to is_permissible_def for
// this cocharacter; the equivalence is cross-checked exhaustively in the
// test suite.
inline bool is_permissible_alcove(const IWElement& w) {
  require_orthogonal(w.ctx, "is_permissible_alcove");
  auto offs = column_offsets(w);
  int n = w.ctx.rank;
  for (const IntVec& m : offs)
    if (!is_zero(m) && !is_unit_difference(m, false)) return false;
  if (!is_unit_difference(offs[0], true)) return false;
  if (w.ctx.family == Family::D && !is_unit_difference(offs[static_cast<size_t>(n)], true))
    return false;
  return true;
}

// The permissible set, enumerated from bounded candidates: translation parts
// are lattice points of Conv(W mu) congruent to mu mod Q^v, linear parts run
// over the finite Weyl group of the ambient Iwahori-Weyl group (even-signed
// only in the even orthogonal case, where the coset condition forces it).
inline std::set<IWElement> permissible_set(const GroupCtx& ctx, const IntVec& mu,
                                           const HullTest& hull = {}) {
  if (static_cast<int>(mu.size()) != ctx.rank)
    throw std::invalid_argument("permissible_set: length mismatch");
  Int maxabs = 0;
  for (const IntVec& m : weyl_orbit(ctx, mu))
    for (Int x : m) maxabs = std::max(maxabs, x < 0 ? -x : x);
  std::vector<IntVec> translations;
  IntVec cur(static_cast<size_t>(ctx.rank), 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == ctx.rank) {
      if (same_translation_coset(ctx, cur, mu) && hull_contains(hull, ctx, mu, to_rat(cur)))
        translations.push_back(cur);
      return;
    }
    for (Int v = -maxabs; v <= maxabs; ++v) {
      cur[static_cast<size_t>(pos)] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  WindowKind kind = ctx.family == Family::D ? WindowKind::EvenSigned : ambient_kind(ctx);
  std::set<IWElement> out;
  enumerate_windows(ctx.rank, kind, [&](const SignedPerm& sigma) {
    for (const IntVec& nu : translations) {
      IWElement w(ctx, nu, sigma);
      if (is_permissible_def(w, mu, hull)) out.insert(w);
    }
  });
  return out;
}

// Whether reflecting w by the given affine root preserves permissibility for
// the unit cocharacter: the displaced vectors w.p_k - p_k + <root, p_k>
// coroot must all stay inside the convex hull.  Equivalent to permissibility
// of s_root * w.
inline bool perm_preserving(const IWElement& w, const AffineRoot& ar) {
  require_orthogonal(w.ctx, "perm_preserving");
  if (!is_permissible_alcove(w))
    throw std::invalid_argument("perm_preserving: element is not permissible");
  int n = w.ctx.rank;
  IntVec mu = unit_cochar(w.ctx);
  IntVec cv = ar.coroot2n();
  auto disp = displacements(w);
  for (int k = 0; k <= n; ++k) {
    Rat coeff = pairing(ar, marked_point(n, k));
    RatVec moved = disp[static_cast<size_t>(k)];
    for (size_t idx = 0; idx < moved.size(); ++idx)
      moved[idx] = moved[idx] + coeff * Rat(cv[idx]);
    if (!in_convex_hull(w.ctx, mu, restrict_sym(moved))) return false;
  }
  return true;
}

// Whether w < s_root * w in the Bruhat order, decided from the base alcove's
// vertices and marked points: either the displaced pairing grows in absolute
// value at some point, or the root vanishes at a point that w moves to the
// side on which the root is positive resp. negative on the alcove.
inline bool bruhat_increases(const IWElement& w, const AffineRoot& ar) {
  require_orthogonal(w.ctx, "bruhat_increases");
  int n = w.ctx.rank;
  std::vector<RatVec> points = w.ctx.alcove_vertices();
  for (int k = 0; k <= n; ++k)
    points.push_back(restrict_sym(marked_point(n, k)));
  int root_sign = pairing(ar, w.ctx.barycenter()).sign();
  if (root_sign == 0) throw internal_error("bruhat_increases: root vanishes on the alcove interior");
  for (const RatVec& v : points) {
    RatVec move = sub(w.apply(v), v);
    Rat lin = linear_pairing(ar, move);
    Rat at_v = pairing(ar, v);
    if (rat_abs(lin) < rat_abs(lin + Rat(2) * at_v)) return true;
    if (at_v == Rat(0) && lin.sign() == root_sign) return true;
  }
  return false;
}

// One step of the constructive lifting: for a permissible non-translation w
// (even orthogonal, unit cocharacter), an affine root whose reflection keeps
// w permissible, raises it in the Bruhat order, and fixes its translation
// part.  The case analysis is self-verified; any mismatch is an internal
// error, never a silent wrong answer.
inline AffineRoot lift_reflection(const IWElement& w) {
  if (w.ctx.family != Family::D)
    throw std::invalid_argument("lift_reflection: requires the even orthogonal case");
  if (w.is_translation())
    throw std::invalid_argument("lift_reflection: element is a translation");
  if (!is_permissible_alcove(w))
    throw std::invalid_argument("lift_reflection: element is not permissible");
  int n = w.ctx.rank;
  int two_n = 2 * n;
  auto disp = displacements(w);

  int i = 0;
  for (int k = 1; k <= n && i == 0; ++k)
    if (!(disp[static_cast<size_t>(k)] == disp[static_cast<size_t>(k - 1)])) i = k;
  if (i == 0) throw internal_error("lift_reflection: displacements constant for a non-translation");

  int j = 0;
  for (int a = 1; a <= two_n; ++a)
    if (disp[0][static_cast<size_t>(a - 1)] == Rat(1)) j = a;
  if (j == 0) throw internal_error("lift_reflection: displacement 0 is not a unit difference");

  int sigma_i = w.s.image2n(i);
  AffineRoot root = [&] {
    if (j == i) {
      std::optional<int> zero_at;
      for (int k = 0; k <= n && !zero_at; ++k)
        if (is_zero(disp[static_cast<size_t>(k)])) zero_at = k;
      if (zero_at) {
        int r = *zero_at;
        if (r < i || r >= n) throw internal_error("lift_reflection: zero displacement out of range");
        if (r == i) {
          if (sigma_i != star_index(i, two_n))
            throw internal_error("lift_reflection: vanishing step without sigma(i) = i*");
          return AffineRoot::pair_root(n, i, star_index(i, two_n) - 1, 1);
        }
        return AffineRoot::pair_root(n, r, r + 1, 0);
      }
      int pre_i = w.s.inverse().image2n(i);
      if (pre_i == i || pre_i == star_index(i, two_n) ||
          i >= std::min(pre_i, star_index(pre_i, two_n)))
        throw internal_error("lift_reflection: preimage index out of position");
      return AffineRoot::pair_root(n, i, pre_i, 1);
    }
    if (j != star_index(sigma_i, two_n))
      throw internal_error("lift_reflection: displacement index matches neither branch");
    if (i >= std::min(sigma_i, star_index(sigma_i, two_n)))
      throw internal_error("lift_reflection: image index out of position");
    return AffineRoot::pair_root(n, i, sigma_i, 1);
  }();

  if (!(pairing(root, disp[0]) == Rat(0)))
    throw internal_error("lift_reflection: chosen root moves the translation part");
  if (!perm_preserving(w, root))
    throw internal_error("lift_reflection: chosen root does not preserve permissibility");
  if (!bruhat_increases(w, root))
    throw internal_error("lift_reflection: chosen root does not raise the Bruhat order");
  return root;
}

struct LiftStep {
  AffineRoot root;
  IWElement before;
  IWElement after;
};

// Iterate lift_reflection until a translation element is reached.  Each step
// preserves the translation part, so the chain certifies w <= t_{w.t}.
inline std::vector<LiftStep> lift_chain(const IWElement& w) {
  if (w.ctx.family != Family::D)
    throw std::invalid_argument("lift_chain: requires the even orthogonal case");
  if (!is_permissible_alcove(w))
    throw std::invalid_argument("lift_chain: element is not permissible");
  std::vector<LiftStep> steps;
  IWElement cur = w;
  size_t bound = static_cast<size_t>(4 * w.ctx.rank * w.ctx.rank + 8);
  while (!cur.is_translation()) {
    AffineRoot root = lift_reflection(cur);
    IWElement nxt = multiply(reflection(w.ctx, root), cur);
    steps.push_back(LiftStep{root, cur, nxt});
    cur = nxt;
    if (steps.size() > bound) throw internal_error("lift_chain: chain failed to terminate");
  }
  if (!(cur == IWElement::translation(w.ctx, w.t)))
    throw internal_error("lift_chain: chain ended at a different translation part");
  return steps;
}

// Embedding of the odd Iwahori-Weyl group into the even one of one higher
// rank, realizing the odd group as the fixed points of the coordinate-flip
// automorphism: translations gain a zero slot, and the linear part gains a
// final signed letter whose sign makes the image even in S_{2n+2}.
inline IWElement steinberg_embed(const IWElement& w) {
  if (w.ctx.family != Family::B)
    throw std::invalid_argument("steinberg_embed: requires the odd orthogonal case");
  int n = w.ctx.rank;
  GroupCtx target(Family::D, n + 1);
  IntVec t = w.t;
  t.push_back(0);
  std::vector<int> window = w.s.window;
  window.push_back(w.s.is_even_in_s2n() ? n + 1 : -(n + 1));
  return IWElement(target, std::move(t), SignedPerm(std::move(window)));
}

struct InheritanceReport {
  long long pairs_checked = 0;
  std::vector<std::pair<IWElement, IWElement>> violations;
};

// Machine check that the Bruhat order of the odd group is inherited from the
// even one through steinberg_embed, over all pairs in a length ball.
inline InheritanceReport check_bruhat_inheritance(int n, Int maxlen, Int guard = 6) {
  if (n < 2 || n > guard_limit(3))
    throw guard_error("check_bruhat_inheritance: rank out of range");
  if (maxlen > guard_limit(guard))
    throw guard_error("check_bruhat_inheritance: maxlen exceeds guard");
  GroupCtx ctx(Family::B, n);
  std::vector<IWElement> elems;
  for (const IWElement& om : omega_elements(ctx))
    for (const IWElement& w : ball(ctx, maxlen, om, guard)) elems.push_back(w);
  InheritanceReport rep;
  for (const IWElement& x : elems) {
    IWElement ex = steinberg_embed(x);
    for (const IWElement& y : elems) {
      ++rep.pairs_checked;
      bool odd_leq = bruhat_leq(x, y);
      bool even_leq = bruhat_leq(ex, steinberg_embed(y));
      if (odd_leq != even_leq) rep.violations.emplace_back(x, y);
    }
  }
  return rep;
}

// Validator for the odd-to-even reduction: a permissible element of the odd
// group embeds to a permissible element of the even group one rank up.  The
// one point of the bigger alcove not covered by the odd alcove's points is
// the all-halves vertex, handled by the parity split: for even linear parts
// its movement agrees with that of ((1/2)^(n), 0); for odd ones that
// movement must vanish and the embedded movement is (0^(n), -1).
inline bool steinberg_preserves_permissibility(const IWElement& w) {
  if (w.ctx.family != Family::B)
    throw std::invalid_argument("steinberg_preserves_permissibility: requires the odd case");
  int n = w.ctx.rank;
  IntVec mu = unit_cochar(w.ctx);
  if (!is_permissible_def(w, mu))
    throw std::invalid_argument("steinberg_preserves_permissibility: element is not permissible");
  GroupCtx even_ctx(Family::D, n + 1);
  IntVec mu_even = unit_cochar(even_ctx);
  IWElement we = steinberg_embed(w);

  RatVec half_n(static_cast<size_t>(n), Rat(1, 2));
  RatVec half_all(static_cast<size_t>(n + 1), Rat(1, 2));
  RatVec move_half_n = sub(w.apply(half_n), half_n);
  RatVec move_half_all = sub(we.apply(half_all), half_all);
  RatVec expected = move_half_n;
  if (w.s.is_even_in_s2n()) {
    expected.push_back(Rat(0));
  } else {
    if (!is_zero(move_half_n)) return false;
    expected.push_back(Rat(-1));
  }
  if (!(move_half_all == expected)) return false;
  if (!in_convex_hull(even_ctx, mu_even, move_half_all)) return false;
  return is_permissible_def(we, mu_even);
}

struct GapResult {
  IntVec mu;
  std::set<IWElement> witnesses;  // permissible but not admissible
};

// For each candidate cocharacter, the elements of Perm(mu) \ Adm(mu).
// Admissibility of the few permissible elements is tested directly against
// the orbit translations, so no ball enumeration is ever needed.
inline std::vector<GapResult> search_gap(const GroupCtx& ctx, const std::vector<IntVec>& mus,
                                         Int guard = 12) {
  std::vector<GapResult> out;
  for (const IntVec& mu : mus) {
    if (length(IWElement::translation(ctx, mu)) > guard_limit(guard))
      throw guard_error("search_gap: translation length of " + vec_str(mu) + " exceeds guard");
    std::vector<IWElement> targets;
    for (const IntVec& m : weyl_orbit(ctx, mu))
      targets.push_back(IWElement::translation(ctx, m));
    GapResult res;
    res.mu = mu;
    for (const IWElement& w : permissible_set(ctx, mu)) {
      bool admissible = false;
      for (const IWElement& tgt : targets)
        if (bruhat_leq(w, tgt)) {
          admissible = true;
          break;
        }
      if (!admissible) res.witnesses.insert(w);
    }
    if (!res.witnesses.empty()) out.push_back(std::move(res));
  }
  return out;
}

}  // namespace alcove
