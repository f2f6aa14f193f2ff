#pragma once

#include <random>

#include "alcove/bruhat.hpp"

namespace alcove::testutil {

inline IWElement random_element(const GroupCtx& ctx, std::mt19937& rng, int coord_bound = 3) {
  std::uniform_int_distribution<int> coord(-coord_bound, coord_bound);
  IntVec t(static_cast<size_t>(ctx.rank));
  for (auto& x : t) x = coord(rng);
  std::vector<int> win(static_cast<size_t>(ctx.rank));
  for (int i = 0; i < ctx.rank; ++i) win[static_cast<size_t>(i)] = i + 1;
  std::shuffle(win.begin(), win.end(), rng);
  if (ctx.family != Family::A)
    for (auto& x : win)
      if (rng() & 1u) x = -x;
  return IWElement(ctx, std::move(t), SignedPerm(std::move(win)));
}

// random product of wall reflections, so the result stays in W_a
inline IWElement random_wa_element(const GroupCtx& ctx, std::mt19937& rng, int max_letters) {
  Frame f(ctx);
  std::uniform_int_distribution<int> wall(0, static_cast<int>(f.refl.size()) - 1);
  std::uniform_int_distribution<int> len(0, max_letters);
  IWElement w = IWElement::identity(ctx);
  int l = len(rng);
  for (int k = 0; k < l; ++k) w = multiply(w, f.refl[static_cast<size_t>(wall(rng))]);
  return w;
}

// independent length oracle: count affine hyperplanes <alpha, x> = d that
// separate the base alcove from its image, over all positive roots and every
// offset d that could possibly separate
inline Int length_by_hyperplanes(const IWElement& w) {
  RatVec b = w.ctx.barycenter();
  RatVec wb = w.apply(b);
  Int count = 0;
  for (const IntVec& alpha : w.ctx.positive_roots()) {
    Rat vb = dot(alpha, b), vwb = dot(alpha, wb);
    Int lo = std::min(vb.num / vb.den, vwb.num / vwb.den) - 2;
    Int hi = std::max(vb.num / vb.den, vwb.num / vwb.den) + 2;
    for (Int d = lo; d <= hi; ++d) {
      int s1 = (vb - Rat(d)).sign(), s2 = (vwb - Rat(d)).sign();
      if (s1 != 0 && s2 != 0 && s1 != s2) ++count;
    }
  }
  return count;
}

}  // namespace alcove::testutil
