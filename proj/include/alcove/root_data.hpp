#pragma once

#include <set>

#include "alcove/base.hpp"
#include "alcove/signed_perm.hpp"

namespace alcove {

// The four split classical families.  Rank n means: GL_n for TypeA (so the
// "n" of GL_m is m), GSp_{2n} for TypeC, O_{2n+1} for TypeB, O_{2n} for
// TypeD.  TypeB and TypeD share the underlying group Z^n x| S*_{2n}; they
// differ in their alcove geometry and hence in their Bruhat orders.
enum class Family { A, B, C, D };

inline char family_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  throw std::invalid_argument("bad family");
}

// One wall of the base alcove: the affine functional <alpha, x> + offset,
// nonnegative on the alcove and vanishing on exactly one facet.
struct Wall {
  IntVec alpha;
  Int offset = 0;
  IntVec coroot;  // coroot of alpha, normalized so <alpha, coroot> = 2
};

struct GroupCtx {
  Family family = Family::A;
  int rank = 1;

  GroupCtx() = default;
  GroupCtx(Family f, int n) : family(f), rank(n) {
    int min_rank = (f == Family::B || f == Family::D) ? 2 : 1;
    if (n < min_rank)
      throw std::invalid_argument("GroupCtx: rank " + std::to_string(n) +
                                  " too small for family " + family_char(f));
  }

  std::string str() const { return std::string(1, family_char(family)) + ":" + std::to_string(rank); }

  static GroupCtx parse(const std::string& s) {
    auto colon = s.find(':');
    if (colon != 1 || s.size() < 3) throw std::invalid_argument("GroupCtx: expected <A|B|C|D>:<rank>, got '" + s + "'");
    Family f;
    switch (s[0]) {
      case 'A': f = Family::A; break;
      case 'B': f = Family::B; break;
      case 'C': f = Family::C; break;
      case 'D': f = Family::D; break;
      default: throw std::invalid_argument("GroupCtx: unknown family '" + s.substr(0, 1) + "'");
    }
    size_t pos = 0;
    int n = std::stoi(s.substr(2), &pos);
    if (pos != s.size() - 2) throw std::invalid_argument("GroupCtx: bad rank in '" + s + "'");
    return GroupCtx(f, n);
  }

  friend bool operator==(const GroupCtx&, const GroupCtx&) = default;
  friend auto operator<=>(const GroupCtx&, const GroupCtx&) = default;

  std::vector<IntVec> simple_roots() const;
  std::vector<IntVec> positive_roots() const;
  std::vector<Wall> walls() const;
  std::vector<RatVec> alcove_vertices() const;
  RatVec barycenter() const;
};

// coroot of a classical root given as an integer functional: x_i - x_j and
// x_i + x_j keep their coefficient vectors, x_i doubles, 2x_i halves
inline IntVec coroot_of(const IntVec& alpha) {
  int support = 0;
  Int norm2 = 0;
  for (Int c : alpha) {
    if (c != 0) ++support;
    norm2 += c * c;
  }
  IntVec cv = alpha;
  if (support == 1) {
    if (norm2 == 1) {
      for (auto& c : cv) c *= 2;  // short root x_i of B_n
    } else if (norm2 == 4) {
      for (auto& c : cv) c /= 2;  // long root 2x_i of C_n
    } else {
      throw std::invalid_argument("coroot_of: unrecognized root");
    }
  } else if (support != 2 || norm2 != 2) {
    throw std::invalid_argument("coroot_of: unrecognized root");
  }
  return cv;
}

inline std::vector<IntVec> GroupCtx::simple_roots() const {
  int n = rank;
  std::vector<IntVec> roots;
  for (int i = 1; i < n; ++i) {
    IntVec a(static_cast<size_t>(n), 0);
    a[static_cast<size_t>(i - 1)] = 1;
    a[static_cast<size_t>(i)] = -1;
    roots.push_back(a);
  }
  IntVec last(static_cast<size_t>(n), 0);
  switch (family) {
    case Family::A:
      return roots;  // GL_n has the n-1 roots x_i - x_{i+1} only
    case Family::B:
      last[static_cast<size_t>(n - 1)] = 1;
      break;
    case Family::C:
      last[static_cast<size_t>(n - 1)] = 2;
      break;
    case Family::D:
      last[static_cast<size_t>(n - 2)] = 1;
      last[static_cast<size_t>(n - 1)] = 1;
      break;
  }
  roots.push_back(last);
  return roots;
}

inline std::vector<IntVec> GroupCtx::positive_roots() const {
  int n = rank;
  std::vector<IntVec> roots;
  auto pair_root = [&](int i, int j, Int cj) {
    IntVec a(static_cast<size_t>(n), 0);
    a[static_cast<size_t>(i - 1)] = 1;
    a[static_cast<size_t>(j - 1)] = cj;
    roots.push_back(a);
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      pair_root(i, j, -1);
      if (family == Family::B || family == Family::C || family == Family::D)
        pair_root(i, j, 1);
    }
  if (family == Family::B || family == Family::C) {
    for (int i = 1; i <= n; ++i) {
      IntVec a(static_cast<size_t>(n), 0);
      a[static_cast<size_t>(i - 1)] = family == Family::B ? 1 : 2;
      roots.push_back(a);
    }
  }
  return roots;
}

// Walls of the base alcove: the simple roots of each irreducible component
// with offset 0, plus 1 minus the component's highest root.  Everything is
// written out per family; the only reducible case is D_2 = A_1 x A_1.
inline std::vector<Wall> GroupCtx::walls() const {
  int n = rank;
  std::vector<Wall> ws;
  auto push = [&](IntVec alpha, Int offset) {
    IntVec cr = coroot_of(alpha);
    ws.push_back(Wall{std::move(alpha), offset, std::move(cr)});
  };
  auto e = [&](int i, Int c) {
    IntVec a(static_cast<size_t>(n), 0);
    a[static_cast<size_t>(i - 1)] = c;
    return a;
  };
  auto pair_fn = [&](int i, Int ci, int j, Int cj) {
    IntVec a(static_cast<size_t>(n), 0);
    a[static_cast<size_t>(i - 1)] = ci;
    a[static_cast<size_t>(j - 1)] = cj;
    return a;
  };
  if (family == Family::D && n == 2) {
    push(pair_fn(1, 1, 2, -1), 0);
    push(pair_fn(1, 1, 2, 1), 0);
    push(pair_fn(1, -1, 2, 1), 1);
    push(pair_fn(1, -1, 2, -1), 1);
    return ws;
  }
  for (const IntVec& a : simple_roots()) push(a, 0);
  switch (family) {
    case Family::A:
      if (n >= 2) push(pair_fn(1, -1, n, 1), 1);  // 1 - (x_1 - x_n)
      break;
    case Family::C:
      push(e(1, -2), 1);  // 1 - 2x_1
      break;
    case Family::B:
    case Family::D:
      push(pair_fn(1, -1, 2, -1), 1);  // 1 - (x_1 + x_2)
      break;
  }
  return ws;
}

// Vertices of the base alcove.  For TypeA the alcove is a prism invariant
// under the line R(1,...,1); the returned points are one representative per
// minimal facet, which is what every vertexwise test in this library needs.
inline std::vector<RatVec> GroupCtx::alcove_vertices() const {
  int n = rank;
  std::vector<RatVec> vs;
  Rat half(1, 2);
  auto halves = [&](int k, Rat last_entry) {
    RatVec v(static_cast<size_t>(n), Rat(0));
    for (int i = 0; i < k; ++i) v[static_cast<size_t>(i)] = half;
    if (last_entry.num != 0) v[static_cast<size_t>(n - 1)] = last_entry;
    return v;
  };
  switch (family) {
    case Family::A:
      for (int k = 0; k < n; ++k) {
        RatVec v(static_cast<size_t>(n), Rat(0));
        for (int i = 0; i < k; ++i) v[static_cast<size_t>(i)] = Rat(1);
        vs.push_back(v);
      }
      return vs;
    case Family::C:
      for (int k = 0; k <= n; ++k) vs.push_back(halves(k, Rat(0)));
      return vs;
    case Family::B: {
      vs.push_back(RatVec(static_cast<size_t>(n), Rat(0)));
      RatVec a0p(static_cast<size_t>(n), Rat(0));
      a0p[0] = Rat(1);
      vs.push_back(a0p);
      for (int k = 2; k <= n; ++k) vs.push_back(halves(k, Rat(0)));
      return vs;
    }
    case Family::D: {
      vs.push_back(RatVec(static_cast<size_t>(n), Rat(0)));
      RatVec a0p(static_cast<size_t>(n), Rat(0));
      a0p[0] = Rat(1);
      vs.push_back(a0p);
      for (int k = 2; k <= n - 2; ++k) vs.push_back(halves(k, Rat(0)));
      vs.push_back(halves(n, Rat(0)));
      vs.push_back(halves(n - 1, -half));
      return vs;
    }
  }
  throw std::logic_error("unreachable");
}

inline RatVec GroupCtx::barycenter() const {
  auto vs = alcove_vertices();
  RatVec b(static_cast<size_t>(rank), Rat(0));
  for (const auto& v : vs) b = add(b, v);
  Rat scale(1, static_cast<Int>(vs.size()));
  for (auto& x : b) x = x * scale;
  return b;
}

// Membership in the coroot lattice Q^v: even coordinate sum for the
// orthogonal types, coordinate sum zero for GL_n, and all of Z^n for
// GSp_{2n} (whose coroots e_i - e_{i+1}, e_n already span).
inline bool in_coroot_lattice(const GroupCtx& ctx, const IntVec& v) {
  if (static_cast<int>(v.size()) != ctx.rank)
    throw std::invalid_argument("in_coroot_lattice: length mismatch");
  Int s = vec_sum(v);
  switch (ctx.family) {
    case Family::A: return s == 0;
    case Family::C: return true;
    case Family::B:
    case Family::D: return s % 2 == 0;
  }
  throw std::logic_error("unreachable");
}

// true when mu - mu' stays in Q^v for every mu' in the Weyl orbit of mu, so
// that all t_{mu'} lie in one W_a-coset; holds for all four families
inline bool same_translation_coset(const GroupCtx& ctx, const IntVec& a, const IntVec& b) {
  return in_coroot_lattice(ctx, sub(a, b));
}

// Orbit of a cocharacter under the finite Weyl group: S_n for TypeA, the
// full signed group for TypeB/TypeC, and the even-signed group S°_{2n} for
// TypeD.  Computed as the closure under the simple reflections.
inline std::set<IntVec> weyl_orbit(const GroupCtx& ctx, const IntVec& mu) {
  if (static_cast<int>(mu.size()) != ctx.rank)
    throw std::invalid_argument("weyl_orbit: length mismatch");
  auto roots = ctx.simple_roots();
  std::vector<std::pair<IntVec, IntVec>> refl;
  for (const auto& a : roots) refl.emplace_back(a, coroot_of(a));
  std::set<IntVec> orbit{mu};
  std::vector<IntVec> todo{mu};
  while (!todo.empty()) {
    IntVec v = std::move(todo.back());
    todo.pop_back();
    for (const auto& [alpha, cv] : refl) {
      Int p = dot(alpha, v);
      if (p == 0) continue;
      IntVec w = v;
      for (size_t k = 0; k < w.size(); ++k) w[k] -= p * cv[k];
      if (orbit.insert(w).second) todo.push_back(w);
    }
  }
  return orbit;
}

// The unique dominant vector in the Weyl orbit: sorted descending for TypeA,
// absolute values sorted descending for TypeB/TypeC, and for TypeD the same
// with the last entry's sign carrying the flip parity (only when no entry
// vanishes; otherwise both parities meet and the nonnegative form wins).
template <class V>
V dominant_rep(const GroupCtx& ctx, const V& x) {
  if (static_cast<int>(x.size()) != ctx.rank)
    throw std::invalid_argument("dominant_rep: length mismatch");
  V y = x;
  if (ctx.family == Family::A) {
    std::sort(y.begin(), y.end(), [](const auto& a, const auto& b) { return b < a; });
    return y;
  }
  int negatives = 0;
  bool has_zero = false;
  for (auto& v : y) {
    if (v < typename V::value_type(0)) {
      ++negatives;
      v = -v;
    } else if (!(typename V::value_type(0) < v)) {
      has_zero = true;
    }
  }
  std::sort(y.begin(), y.end(), [](const auto& a, const auto& b) { return b < a; });
  if (ctx.family == Family::D && negatives % 2 != 0 && !has_zero) y.back() = -y.back();
  return y;
}

// Exact membership test x in Conv(W mu), by the dominance criterion: the
// dominant representatives must satisfy mu+ - x+ in the nonnegative rational
// cone spanned by the simple coroots.  When mu is a signed permutation of
// e_1 (orthogonal or symplectic), the hull is the cross-polytope and the
// closed form sum |x_i| <= 1 is used instead.
inline bool in_convex_hull(const GroupCtx& ctx, const IntVec& mu, const RatVec& x) {
  if (static_cast<int>(mu.size()) != ctx.rank || x.size() != mu.size())
    throw std::invalid_argument("in_convex_hull: length mismatch");
  int n = ctx.rank;
  IntVec mu_dom = dominant_rep(ctx, mu);
  if (ctx.family != Family::A) {
    bool is_e1 = mu_dom[0] == 1;
    for (int k = 1; k < n && is_e1; ++k) is_e1 = mu_dom[static_cast<size_t>(k)] == 0;
    if (is_e1) {
      Rat s;
      for (const Rat& v : x) s = s + rat_abs(v);
      return s <= Rat(1);
    }
  }
  RatVec x_dom = dominant_rep(ctx, x);
  RatVec delta = sub(to_rat(mu_dom), x_dom);
  // prefix sums P_k of delta; the cone coefficients are rational functions
  // of these, and feasibility reduces to sign conditions
  RatVec prefix(delta.size());
  Rat run;
  for (size_t k = 0; k < delta.size(); ++k) {
    run = run + delta[k];
    prefix[k] = run;
  }
  Rat zero(0);
  switch (ctx.family) {
    case Family::A: {
      if (!(prefix.back() == zero)) return false;
      for (size_t k = 0; k + 1 < prefix.size(); ++k)
        if (prefix[k] < zero) return false;
      return true;
    }
    case Family::B:
    case Family::C: {
      for (const Rat& p : prefix)
        if (p < zero) return false;
      return true;
    }
    case Family::D: {
      for (size_t k = 0; k + 2 < prefix.size(); ++k)
        if (prefix[k] < zero) return false;
      // the two branch coefficients: (P_{n-1} - delta_n)/2 and P_n/2
      if (prefix[static_cast<size_t>(n - 2)] - delta.back() < zero) return false;
      if (prefix.back() < zero) return false;
      return true;
    }
  }
  throw std::logic_error("unreachable");
}

inline bool is_minuscule(const GroupCtx& ctx, const IntVec& mu) {
  for (const IntVec& alpha : ctx.positive_roots()) {
    Int p = dot(alpha, mu);
    if (p < -1 || p > 1) return false;
  }
  return true;
}

// all dominant cocharacters with entries in {0, ..., max_entry}
inline std::vector<IntVec> dominant_cochars(const GroupCtx& ctx, Int max_entry) {
  std::vector<IntVec> out;
  IntVec cur(static_cast<size_t>(ctx.rank), 0);
  std::function<void(int, Int)> rec = [&](int pos, Int bound) {
    if (pos == ctx.rank) {
      out.push_back(cur);
      return;
    }
    for (Int v = bound; v >= 0; --v) {
      cur[static_cast<size_t>(pos)] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, max_entry);
  return out;
}

// window kinds for the finite Weyl group (orbit/coset tests) and for the
// ambient group's linear parts (enumeration of elements)
inline WindowKind weyl_kind(const GroupCtx& ctx) {
  switch (ctx.family) {
    case Family::A: return WindowKind::Plain;
    case Family::B:
    case Family::C: return WindowKind::AllSigned;
    case Family::D: return WindowKind::EvenSigned;
  }
  throw std::logic_error("unreachable");
}

inline WindowKind ambient_kind(const GroupCtx& ctx) {
  // TypeD sits inside the full group Z^n x| S*_{2n} of O_{2n}
  return ctx.family == Family::A ? WindowKind::Plain : WindowKind::AllSigned;
}

}  // namespace alcove
