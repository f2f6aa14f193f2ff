#pragma once

#include "alcove/base.hpp"
#include "alcove/root_data.hpp"
#include "alcove/signed_perm.hpp"

namespace alcove {

// Element w = t_nu * sigma of an Iwahori-Weyl group Z^n x| W: an integer
// translation part and a (signed) permutation linear part, tagged with the
// group context that fixes the alcove geometry.
struct IWElement {
  GroupCtx ctx;
  IntVec t;
  SignedPerm s;

  IWElement() = default;
  IWElement(GroupCtx c, IntVec trans, SignedPerm lin)
      : ctx(c), t(std::move(trans)), s(std::move(lin)) {
    if (static_cast<int>(t.size()) != ctx.rank || s.rank() != ctx.rank)
      throw std::invalid_argument("IWElement: rank mismatch");
    if (ctx.family == Family::A && !s.all_positive())
      throw std::invalid_argument("IWElement: TypeA linear part must be unsigned");
  }

  static IWElement identity(const GroupCtx& c) {
    return IWElement(c, IntVec(static_cast<size_t>(c.rank), 0), SignedPerm::identity(c.rank));
  }
  static IWElement translation(const GroupCtx& c, IntVec nu) {
    return IWElement(c, std::move(nu), SignedPerm::identity(c.rank));
  }
  static IWElement linear(const GroupCtx& c, SignedPerm sigma) {
    return IWElement(c, IntVec(static_cast<size_t>(c.rank), 0), std::move(sigma));
  }

  bool is_identity() const { return is_zero(t) && s.is_identity(); }
  bool is_translation() const { return s.is_identity(); }

  IWElement inverse() const {
    SignedPerm si = s.inverse();
    IntVec ti = neg(act(si, t));
    return IWElement(ctx, std::move(ti), std::move(si));
  }

  template <class V>
  V apply(const V& p) const {
    V r = act(s, p);
    for (size_t k = 0; k < r.size(); ++k) r[k] = r[k] + t[k];
    return r;
  }

  friend bool operator==(const IWElement&, const IWElement&) = default;
  friend auto operator<=>(const IWElement&, const IWElement&) = default;
};

inline IWElement multiply(const IWElement& a, const IWElement& b) {
  if (a.ctx != b.ctx) throw std::invalid_argument("multiply: context mismatch");
  return IWElement(a.ctx, add(a.t, act(a.s, b.t)), compose(a.s, b.s));
}

inline void require_orthogonal(const GroupCtx& ctx, const char* what) {
  if (ctx.family != Family::B && ctx.family != Family::D)
    throw std::invalid_argument(std::string(what) + ": requires an orthogonal context");
}

// Image of w under the natural embedding into the Iwahori-Weyl group of
// GL_{2n}: translation (x, -x reversed), linear part the 2n-letter form.
inline std::pair<IntVec, std::vector<int>> embed_gl(const IWElement& w) {
  require_orthogonal(w.ctx, "embed_gl");
  return {embed_sym(w.t), w.s.two_n_letters()};
}

// plain permutation action of a 2n-letter form on 2n-vectors
template <class V>
V act_letters(const std::vector<int>& letters, const V& v) {
  V r(v.size());
  for (size_t k = 0; k < v.size(); ++k)
    r[static_cast<size_t>(letters[k] - 1)] = v[k];
  return r;
}

// the standard column omega_k = (1^(k), 0^(2n-k)) for 0 <= k <= 2n
inline IntVec std_column(int n, int k) {
  IntVec v(static_cast<size_t>(2 * n), 0);
  for (int i = 0; i < k; ++i) v[static_cast<size_t>(i)] = 1;
  return v;
}

// Extended alcove: the column sequence v_0, ..., v_{2n-1} in Z^{2n}, with
// v_{2n} := v_0 + 1 implicit.  Valid sequences are entrywise monotone, gain
// total 1 per column, and satisfy the duality v_k + v_{2n-k}* = 1.
struct ExtendedAlcove {
  int n = 0;
  std::vector<IntVec> vs;

  IntVec v(int k) const {
    if (k < 2 * n) return vs[static_cast<size_t>(k)];
    IntVec r = vs[0];
    for (auto& x : r) x += 1;
    return r;
  }

  // empty string when valid, otherwise which axiom failed
  std::string invalid_reason() const {
    if (static_cast<int>(vs.size()) != 2 * n) return "expected 2n columns";
    for (const auto& col : vs)
      if (static_cast<int>(col.size()) != 2 * n) return "columns must lie in Z^(2n)";
    for (int k = 1; k <= 2 * n; ++k) {
      IntVec lo = v(k - 1), hi = v(k);
      for (size_t idx = 0; idx < lo.size(); ++idx)
        if (lo[idx] > hi[idx]) return "columns must be entrywise nondecreasing";
      if (vec_sum(hi) != vec_sum(lo) + 1) return "column sums must grow by exactly 1";
    }
    for (int k = 0; k <= 2 * n; ++k) {
      IntVec d = add(v(k), reversed(v(2 * n - k)));
      for (Int x : d)
        if (x != 1) return "duality v_k + v_{2n-k}* = 1 violated";
    }
    return "";
  }
};

inline ExtendedAlcove to_extended_alcove(const IWElement& w) {
  require_orthogonal(w.ctx, "to_extended_alcove");
  int n = w.ctx.rank;
  auto [trans, letters] = embed_gl(w);
  ExtendedAlcove alc;
  alc.n = n;
  for (int k = 0; k < 2 * n; ++k)
    alc.vs.push_back(add(trans, act_letters(letters, std_column(n, k))));
  return alc;
}

// Inverse of to_extended_alcove; the group acts simply transitively on
// extended alcoves, so the element is read off from the column differences.
inline IWElement from_extended_alcove(const GroupCtx& ctx, const ExtendedAlcove& alc) {
  require_orthogonal(ctx, "from_extended_alcove");
  if (alc.n != ctx.rank) throw std::invalid_argument("from_extended_alcove: rank mismatch");
  std::string why = alc.invalid_reason();
  if (!why.empty()) throw std::invalid_argument("from_extended_alcove: " + why);
  int n = alc.n;
  std::vector<int> letters(static_cast<size_t>(2 * n));
  for (int k = 1; k <= 2 * n; ++k) {
    IntVec d = sub(alc.v(k), alc.v(k - 1));
    int j = 0;
    for (size_t idx = 0; idx < d.size(); ++idx)
      if (d[idx] == 1) j = static_cast<int>(idx) + 1;
    letters[static_cast<size_t>(k - 1)] = j;
  }
  for (int i = 1; i <= 2 * n; ++i) {
    int istar = star_index(i, 2 * n);
    if (letters[static_cast<size_t>(istar - 1)] !=
        star_index(letters[static_cast<size_t>(i - 1)], 2 * n))
      throw std::invalid_argument("from_extended_alcove: column letters break the star symmetry");
  }
  std::vector<int> window(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int img = letters[static_cast<size_t>(i - 1)];
    window[static_cast<size_t>(i - 1)] = img <= n ? img : -star_index(img, 2 * n);
  }
  IntVec trans = restrict_sym(alc.v(0));
  return IWElement(ctx, std::move(trans), SignedPerm(std::move(window)));
}

// column offsets from the standard extended alcove: entry k is v_k - omega_k,
// for k = 0..2n.  They sum to zero, repeat at the ends, and satisfy the
// duality offset_k + offset_{2n-k}* = 0 and the one-step recursion
// offset_k = offset_{k-1} + e_{sigma(k)} - e_k.
inline std::vector<IntVec> column_offsets(const IWElement& w) {
  ExtendedAlcove alc = to_extended_alcove(w);
  std::vector<IntVec> out;
  for (int k = 0; k <= 2 * alc.n; ++k)
    out.push_back(sub(alc.v(k), std_column(alc.n, k)));
  return out;
}

// the marked point ((1/2)^(k), 0^(2n-2k), (-1/2)^(k)) of the base alcove,
// the midpoint average of the standard columns omega_k and omega_{2n-k}
inline RatVec marked_point(int n, int k) {
  RatVec p(static_cast<size_t>(2 * n), Rat(0));
  for (int i = 0; i < k; ++i) {
    p[static_cast<size_t>(i)] = Rat(1, 2);
    p[static_cast<size_t>(2 * n - 1 - i)] = Rat(-1, 2);
  }
  return p;
}

// Displacements w.p_k - p_k at the marked points p_k, k = 0..n: the
// symmetrizations (offset_k + offset_{2n-k})/2 of the column offsets.
inline std::vector<RatVec> displacements(const IWElement& w) {
  auto offs = column_offsets(w);
  int n = w.ctx.rank;
  std::vector<RatVec> out;
  for (int k = 0; k <= n; ++k) {
    RatVec d(static_cast<size_t>(2 * n));
    for (size_t idx = 0; idx < d.size(); ++idx)
      d[idx] = Rat(offs[static_cast<size_t>(k)][idx] + offs[static_cast<size_t>(2 * n - k)][idx], 2);
    out.push_back(std::move(d));
  }
  return out;
}

// Bounds tying paired coordinates of the column offsets: for indices inside
// the symmetric window {k+1, ..., 2n-k} the sum offset_k(i) + offset_k(i*)
// lies in [0, 1], outside it in [-1, 0].  Holds for every group element; the
// permissibility machinery depends on it, so it is exposed as a validator.
inline bool offset_bounds_hold(const IWElement& w) {
  auto offs = column_offsets(w);
  int n = w.ctx.rank;
  for (int k = 0; k <= n; ++k) {
    const IntVec& m = offs[static_cast<size_t>(k)];
    for (int i = 1; i <= 2 * n; ++i) {
      Int pair_sum = m[static_cast<size_t>(i - 1)] + m[static_cast<size_t>(star_index(i, 2 * n) - 1)];
      bool inside = i > k && i <= 2 * n - k;
      if (inside ? (pair_sum < 0 || pair_sum > 1) : (pair_sum < -1 || pair_sum > 0))
        return false;
    }
  }
  return true;
}

// Affine root on the embedded 2n-dimensional picture.  Pair form: the
// functional x_i - x_j - d with i < j, j != i*, normalized by i <= j* under
// the identification (i,j;d) = (j*,i*;d).  Short form (odd orthogonal only):
// x_i - d with coroot 2e_i, kept with i <= n.
struct AffineRoot {
  int n = 0;
  int i = 0;
  int j = 0;  // 0 marks the short form
  Int d = 0;

  static AffineRoot pair_root(int n, int i, int j, Int d) {
    if (i < 1 || j > 2 * n || i >= j)
      throw std::invalid_argument("AffineRoot: need 1 <= i < j <= 2n");
    if (j == star_index(i, 2 * n))
      throw std::invalid_argument("AffineRoot: j = i* is not a root");
    if (i > star_index(j, 2 * n)) {
      int ni = star_index(j, 2 * n);
      j = star_index(i, 2 * n);
      i = ni;
    }
    AffineRoot r;
    r.n = n;
    r.i = i;
    r.j = j;
    r.d = d;
    return r;
  }

  static AffineRoot short_root(int n, int i, Int d) {
    if (i < 1 || i > n)
      throw std::invalid_argument("AffineRoot: short form needs 1 <= i <= n");
    AffineRoot r;
    r.n = n;
    r.i = i;
    r.d = d;
    return r;
  }

  bool is_short() const { return j == 0; }

  IntVec coroot2n() const {
    IntVec c(static_cast<size_t>(2 * n), 0);
    if (is_short()) {
      c[static_cast<size_t>(i - 1)] = 2;
      c[static_cast<size_t>(star_index(i, 2 * n) - 1)] = -2;
    } else {
      c[static_cast<size_t>(i - 1)] += 1;
      c[static_cast<size_t>(j - 1)] -= 1;
      c[static_cast<size_t>(star_index(j, 2 * n) - 1)] += 1;
      c[static_cast<size_t>(star_index(i, 2 * n) - 1)] -= 1;
    }
    return c;
  }

  IntVec coroot_n() const { return restrict_sym(coroot2n()); }

  std::string str() const {
    if (is_short()) return "x" + std::to_string(i) + " - " + std::to_string(d);
    return "x" + std::to_string(i) + " - x" + std::to_string(j) + " - " + std::to_string(d);
  }

  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

// exact value of the affine functional at a point given in either the
// n-dimensional coordinates or the embedded 2n-dimensional ones
template <class V>
auto pairing(const AffineRoot& ar, const V& p) {
  V q = static_cast<int>(p.size()) == ar.n ? embed_sym(p) : p;
  if (static_cast<int>(q.size()) != 2 * ar.n)
    throw std::invalid_argument("pairing: point has wrong dimension");
  using T = typename V::value_type;
  T val = q[static_cast<size_t>(ar.i - 1)] - T(ar.d);
  if (!ar.is_short()) val = val - q[static_cast<size_t>(ar.j - 1)];
  return val;
}

// value of the linear part (d = 0) of the root
template <class V>
auto linear_pairing(const AffineRoot& ar, const V& p) {
  AffineRoot lin = ar;
  lin.d = 0;
  return pairing(lin, p);
}

// The reflection attached to an affine root, as a group element: the linear
// reflection composed with translation by d times the coroot.
inline IWElement reflection(const GroupCtx& ctx, const AffineRoot& ar) {
  require_orthogonal(ctx, "reflection");
  if (ar.n != ctx.rank) throw std::invalid_argument("reflection: rank mismatch");
  if (ar.is_short() && ctx.family != Family::B)
    throw std::invalid_argument("reflection: short roots exist only in the odd case");
  int n = ar.n;
  std::vector<int> window(static_cast<size_t>(n));
  if (ar.is_short()) {
    for (int l = 1; l <= n; ++l) window[static_cast<size_t>(l - 1)] = l == ar.i ? -l : l;
  } else {
    // double transposition (i j)(i* j*) in the 2n-letter picture
    std::vector<int> letters(static_cast<size_t>(2 * n));
    for (int l = 1; l <= 2 * n; ++l) letters[static_cast<size_t>(l - 1)] = l;
    auto swap_letters = [&](int a, int b) {
      std::swap(letters[static_cast<size_t>(a - 1)], letters[static_cast<size_t>(b - 1)]);
    };
    swap_letters(ar.i, ar.j);
    swap_letters(star_index(ar.i, 2 * n), star_index(ar.j, 2 * n));
    for (int l = 1; l <= n; ++l) {
      int img = letters[static_cast<size_t>(l - 1)];
      window[static_cast<size_t>(l - 1)] = img <= n ? img : -star_index(img, 2 * n);
    }
  }
  IntVec trans = ar.coroot_n();
  for (auto& x : trans) x *= ar.d;
  return IWElement(ctx, std::move(trans), SignedPerm(std::move(window)));
}

// finite reflection for a classical root functional given on R^n
inline SignedPerm finite_reflection_window(int n, const IntVec& alpha) {
  std::vector<int> window(static_cast<size_t>(n));
  for (int l = 1; l <= n; ++l) window[static_cast<size_t>(l - 1)] = l;
  std::vector<std::pair<int, Int>> support;
  for (int k = 0; k < n; ++k)
    if (alpha[static_cast<size_t>(k)] != 0) support.emplace_back(k + 1, alpha[static_cast<size_t>(k)]);
  if (support.size() == 1) {
    int i = support[0].first;
    window[static_cast<size_t>(i - 1)] = -i;  // sign flip for x_i or 2x_i
  } else if (support.size() == 2) {
    auto [i, ci] = support[0];
    auto [j, cj] = support[1];
    if (ci == -cj) {  // x_i - x_j: plain transposition
      window[static_cast<size_t>(i - 1)] = j;
      window[static_cast<size_t>(j - 1)] = i;
    } else {  // x_i + x_j: transposition with both signs flipped
      window[static_cast<size_t>(i - 1)] = -j;
      window[static_cast<size_t>(j - 1)] = -i;
    }
  } else {
    throw std::invalid_argument("finite_reflection_window: unrecognized root");
  }
  return SignedPerm(std::move(window));
}

// reflection across a base-alcove wall <alpha, x> + offset = 0
inline IWElement wall_reflection(const GroupCtx& ctx, const Wall& wall) {
  IntVec trans = wall.coroot;
  for (auto& x : trans) x *= -wall.offset;
  return IWElement(ctx, std::move(trans), finite_reflection_window(ctx.rank, wall.alpha));
}

}  // namespace alcove
