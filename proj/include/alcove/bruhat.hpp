#pragma once

#include <set>

#include "alcove/iwahori_weyl.hpp"

namespace alcove {

// Per-context data for gallery walks: the walls of the base alcove, their
// reflections, and an integer-scaled interior point.  All descent and length
// computations reduce to integer sign tests against this frame.
struct Frame {
  GroupCtx ctx;
  std::vector<Wall> walls;
  std::vector<IWElement> refl;
  IntVec bary_scaled;
  Int scale = 1;

  explicit Frame(const GroupCtx& c) : ctx(c), walls(c.walls()) {
    for (const Wall& wl : walls) refl.push_back(wall_reflection(ctx, wl));
    RatVec b = ctx.barycenter();
    scale = 1;
    for (const Rat& x : b) scale = std::lcm(scale, x.den);
    for (const Rat& x : b) bary_scaled.push_back(x.num * (scale / x.den));
  }

  // value of wall k at w * barycenter, times the positive scale factor
  Int wall_value(int k, const IWElement& w) const {
    IntVec p = act(w.s, bary_scaled);
    for (size_t idx = 0; idx < p.size(); ++idx) p[idx] += scale * w.t[idx];
    return dot(walls[static_cast<size_t>(k)].alpha, p) +
           walls[static_cast<size_t>(k)].offset * scale;
  }

  // first wall separating the base alcove from w * alcove, or -1 when w has
  // length zero; multiplying by refl[k] on the left then shortens w
  int first_descent(const IWElement& w) const {
    for (int k = 0; k < static_cast<int>(walls.size()); ++k)
      if (wall_value(k, w) < 0) return k;
    return -1;
  }
};

// gallery distance from the base alcove: the number of affine hyperplanes
// separating it from its image
inline Int length(const IWElement& w) {
  Frame f(w.ctx);
  IWElement cur = w;
  Int len = 0;
  while (true) {
    int k = f.first_descent(cur);
    if (k < 0) return len;
    cur = multiply(f.refl[static_cast<size_t>(k)], cur);
    ++len;
    if (len > 1000000) throw internal_error("length: gallery walk failed to terminate");
  }
}

// Reduced word w = s_{letters[0]} ... s_{letters.back()} * omega, where the
// letters index walls of the base alcove and omega stabilizes it.
struct ReducedWord {
  std::vector<int> letters;
  IWElement omega;
};

inline ReducedWord omega_decompose(const IWElement& w) {
  Frame f(w.ctx);
  ReducedWord rw;
  IWElement cur = w;
  while (true) {
    int k = f.first_descent(cur);
    if (k < 0) break;
    rw.letters.push_back(k);
    cur = multiply(f.refl[static_cast<size_t>(k)], cur);
    if (rw.letters.size() > 1000000)
      throw internal_error("omega_decompose: gallery walk failed to terminate");
  }
  rw.omega = cur;
  return rw;
}

inline IWElement omega_part(const IWElement& w) { return omega_decompose(w).omega; }

// the length-zero elements: one per W_a-coset (finite except for TypeA)
inline std::vector<IWElement> omega_elements(const GroupCtx& ctx) {
  if (ctx.family == Family::A)
    throw std::invalid_argument("omega_elements: TypeA has infinitely many length-zero elements");
  std::vector<IWElement> reps{IWElement::identity(ctx)};
  if (ctx.family != Family::C) {
    reps.push_back(IWElement::translation(ctx, basis(ctx.rank, 1)));
    if (ctx.family == Family::D) {
      std::vector<int> flip_last = SignedPerm::identity(ctx.rank).window;
      flip_last.back() = -flip_last.back();
      SignedPerm fl{flip_last};
      reps.push_back(IWElement::linear(ctx, fl));
      reps.push_back(multiply(reps[1], reps[2]));
    }
  }
  std::vector<IWElement> out;
  for (const IWElement& r : reps) out.push_back(omega_part(r));
  return out;
}

// whether w1 and w2 lie in the same coset of the affine Weyl group
// W_a = Q^v x| W°: the quotient must have coroot-lattice translation part
// and, in the even orthogonal case, an even-signed linear part
inline bool same_wa_coset(const IWElement& w1, const IWElement& w2) {
  if (w1.ctx != w2.ctx) throw std::invalid_argument("same_wa_coset: context mismatch");
  IWElement q = multiply(w1, w2.inverse());
  if (w1.ctx.family == Family::D && !q.s.is_even_in_s2n()) return false;
  return in_coroot_lattice(w1.ctx, q.t);
}

// Bruhat order.  Within one W_a-coset this runs the left-descent recursion:
// for s with sv < v, w <= v iff (sw < w ? sw : w) <= sv, a single O(length)
// walk.  Elements in different cosets are incomparable.
inline bool bruhat_leq(const IWElement& w, const IWElement& v) {
  if (w.ctx != v.ctx) throw std::invalid_argument("bruhat_leq: context mismatch");
  if (w == v) return true;
  Frame f(w.ctx);
  ReducedWord dw = omega_decompose(w);
  ReducedWord dv = omega_decompose(v);
  if (!(dw.omega == dv.omega)) return false;
  IWElement x = multiply(w, dw.omega.inverse());
  IWElement y = multiply(v, dv.omega.inverse());
  while (!y.is_identity()) {
    int k = f.first_descent(y);
    if (k < 0) throw internal_error("bruhat_leq: nontrivial length-zero element inside W_a");
    const IWElement& s = f.refl[static_cast<size_t>(k)];
    if (f.wall_value(k, x) < 0) x = multiply(s, x);
    y = multiply(s, y);
  }
  return x.is_identity();
}

// All elements of the W_a-coset of coset_rep with length <= maxlen, by
// breadth-first search from the coset's length-zero element.  First-visit
// depth equals length, so no per-element length computations are needed.
inline std::set<IWElement> ball(const GroupCtx& ctx, Int maxlen, const IWElement& coset_rep,
                                Int guard = 12) {
  if (coset_rep.ctx != ctx) throw std::invalid_argument("ball: context mismatch");
  if (maxlen > guard_limit(guard))
    throw guard_error("ball: radius " + std::to_string(maxlen) + " exceeds guard");
  Frame f(ctx);
  std::set<IWElement> seen;
  std::vector<IWElement> layer{omega_part(coset_rep)};
  seen.insert(layer[0]);
  for (Int depth = 1; depth <= maxlen && !layer.empty(); ++depth) {
    std::vector<IWElement> next;
    for (const IWElement& x : layer)
      for (const IWElement& s : f.refl) {
        IWElement y = multiply(s, x);
        if (seen.insert(y).second) next.push_back(y);
      }
    layer = std::move(next);
  }
  return seen;
}

}  // namespace alcove
