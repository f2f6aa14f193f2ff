#pragma once

#include <map>
#include <mutex>
#include <optional>

#include "alcove/bruhat.hpp"

namespace alcove {

// Subword-property Bruhat test: w <= v iff some subword of a fixed reduced
// word of v's W_a part evaluates to w's W_a part.  Exponential in principle;
// the prefix sets are memoized, so the cost is bounded by the size of the
// Bruhat interval below v.  Independent of bruhat_leq's descent recursion.
inline bool leq_subword(const IWElement& w, const IWElement& v, Int guard = 8) {
  if (w.ctx != v.ctx) throw std::invalid_argument("leq_subword: context mismatch");
  Frame f(w.ctx);
  ReducedWord dw = omega_decompose(w);
  ReducedWord dv = omega_decompose(v);
  if (static_cast<Int>(dv.letters.size()) > guard_limit(guard))
    throw guard_error("leq_subword: length " + std::to_string(dv.letters.size()) +
                      " exceeds guard");
  if (!(dw.omega == dv.omega)) return false;
  IWElement target = multiply(w, dw.omega.inverse());
  std::set<IWElement> values{IWElement::identity(w.ctx)};
  for (int letter : dv.letters) {
    std::set<IWElement> grown = values;
    const IWElement& s = f.refl[static_cast<size_t>(letter)];
    for (const IWElement& x : values) grown.insert(multiply(x, s));
    values = std::move(grown);
  }
  return values.count(target) > 0;
}

namespace detail {

// reduced row echelon form of an augmented rational matrix, in place;
// returns the pivot column of each row
inline std::vector<int> rref(std::vector<RatVec>& m) {
  std::vector<int> pivots;
  size_t row = 0;
  size_t cols = m.empty() ? 0 : m[0].size();
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t pr = row;
    while (pr < m.size() && m[pr][col] == Rat(0)) ++pr;
    if (pr == m.size()) continue;
    std::swap(m[row], m[pr]);
    Rat inv = Rat(1) / m[row][col];
    for (auto& x : m[row]) x = x * inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == Rat(0)) continue;
      Rat factor = m[r][col];
      for (size_t c = 0; c < cols; ++c) m[r][c] = m[r][c] - factor * m[row][c];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

// exact solution of (cols) * c = b for independent columns; nullopt when
// inconsistent
inline std::optional<RatVec> solve_columns(const std::vector<RatVec>& cols, const RatVec& b) {
  size_t m = b.size(), k = cols.size();
  std::vector<RatVec> aug(m, RatVec(k + 1, Rat(0)));
  for (size_t r = 0; r < m; ++r) {
    for (size_t c = 0; c < k; ++c) aug[r][c] = cols[c][r];
    aug[r][k] = b[r];
  }
  auto pivots = rref(aug);
  for (size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] == static_cast<int>(k)) return std::nullopt;
  RatVec sol(k, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) sol[static_cast<size_t>(pivots[r])] = aug[r][k];
  return sol;
}

// 1-dimensional kernel of a (rows) x (cols) matrix, or nullopt
inline std::optional<RatVec> kernel_line(std::vector<RatVec> m, size_t cols) {
  auto pivots = rref(m);
  if (pivots.size() + 1 != cols) return std::nullopt;
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  RatVec v(cols, Rat(0));
  v[free_col] = Rat(1);
  for (size_t r = 0; r < pivots.size(); ++r)
    v[static_cast<size_t>(pivots[r])] = -m[r][free_col];
  return v;
}

// H-representation of Conv(W mu), computed from the vertex set alone: an
// affine-hull frame plus every hyperplane spanned by hull-dimension many
// vertices that has all vertices on one side
struct HullRep {
  RatVec base;
  std::vector<RatVec> dirs;                  // affine-hull basis
  std::vector<std::pair<IntVec, Int>> cuts;  // u . c <= beta in hull coordinates

  std::optional<RatVec> coords(const RatVec& x) const { return solve_columns(dirs, sub(x, base)); }

  bool contains(const RatVec& x) const {
    auto c = coords(x);
    if (!c) return false;
    for (const auto& [u, beta] : cuts) {
      Rat v;
      for (size_t k = 0; k < u.size(); ++k) v = v + Rat(u[k]) * (*c)[k];
      if (Rat(beta) < v) return false;
    }
    return true;
  }
};

inline HullRep build_hull_rep(const GroupCtx& ctx, const IntVec& mu) {
  std::vector<RatVec> verts;
  for (const IntVec& v : weyl_orbit(ctx, mu)) verts.push_back(to_rat(v));
  HullRep rep;
  rep.base = verts[0];
  for (const RatVec& v : verts) {
    RatVec d = sub(v, rep.base);
    if (is_zero(d)) continue;
    if (!solve_columns(rep.dirs, d)) rep.dirs.push_back(d);
  }
  size_t dim = rep.dirs.size();
  if (dim == 0) return rep;
  std::vector<RatVec> coords;
  for (const RatVec& v : verts) coords.push_back(*rep.coords(v));

  std::set<std::pair<IntVec, Int>> cuts;
  std::vector<size_t> pick(dim);
  std::function<void(size_t, size_t)> combos = [&](size_t start, size_t chosen) {
    if (chosen == dim) {
      // hyperplane u . p = beta through the picked points
      std::vector<RatVec> m;
      for (size_t idx : pick) {
        RatVec row = coords[idx];
        row.push_back(Rat(-1));
        m.push_back(std::move(row));
      }
      auto line = kernel_line(std::move(m), dim + 1);
      if (!line) return;
      RatVec u(line->begin(), line->end() - 1);
      Rat beta = line->back();
      int below = 0, above = 0;
      for (const RatVec& c : coords) {
        Rat v;
        for (size_t k = 0; k < dim; ++k) v = v + u[k] * c[k];
        if (v < beta) ++below;
        if (beta < v) ++above;
      }
      if (below > 0 && above > 0) return;
      if (above > 0) {
        for (auto& x : u) x = -x;
        beta = -beta;
      }
      // integerize and normalize
      Int lcm = beta.den;
      for (const Rat& x : u) lcm = std::lcm(lcm, x.den);
      IntVec iu;
      for (const Rat& x : u) iu.push_back(x.num * (lcm / x.den));
      Int ibeta = beta.num * (lcm / beta.den);
      Int g = ibeta < 0 ? -ibeta : ibeta;
      for (Int x : iu) g = std::gcd(g, x < 0 ? -x : x);
      if (g > 1) {
        for (auto& x : iu) x /= g;
        ibeta /= g;
      }
      cuts.emplace(std::move(iu), ibeta);
      return;
    }
    for (size_t idx = start; idx + (dim - chosen) <= coords.size(); ++idx) {
      pick[chosen] = idx;
      combos(idx + 1, chosen + 1);
    }
  };
  combos(0, 0);
  rep.cuts.assign(cuts.begin(), cuts.end());
  return rep;
}

inline const HullRep& hull_rep_cached(const GroupCtx& ctx, const IntVec& mu) {
  static std::map<std::pair<GroupCtx, IntVec>, HullRep> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(ctx, mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_hull_rep(ctx, mu)).first;
  return it->second;
}

}  // namespace detail

// Reference hull membership: x in Conv(W mu), decided against the facet
// description enumerated from the orbit vertices.  Fully independent of the
// dominance-criterion path in in_convex_hull.
inline bool hull_membership_vertices(const GroupCtx& ctx, const IntVec& mu, const RatVec& x,
                                     Int guard = 4) {
  if (ctx.rank > guard_limit(guard))
    throw guard_error("hull_membership_vertices: rank exceeds guard");
  if (static_cast<int>(mu.size()) != ctx.rank || x.size() != mu.size())
    throw std::invalid_argument("hull_membership_vertices: length mismatch");
  return detail::hull_rep_cached(ctx, mu).contains(x);
}

// Reference admissible set: same ball-and-filter definition as
// admissible_set, with every Bruhat comparison routed through the subword
// oracle instead of the descent recursion.
inline std::set<IWElement> admissible_bruteforce(const GroupCtx& ctx, const IntVec& mu,
                                                 Int guard = 8) {
  IWElement tmu = IWElement::translation(ctx, mu);
  std::vector<IWElement> targets;
  Int radius = 0;
  for (const IntVec& m : weyl_orbit(ctx, mu)) {
    targets.push_back(IWElement::translation(ctx, m));
    radius = std::max(radius, length(targets.back()));
  }
  if (radius > guard_limit(guard))
    throw guard_error("admissible_bruteforce: translation length exceeds guard");
  std::set<IWElement> out;
  for (const IWElement& w : ball(ctx, radius, tmu, std::max<Int>(radius, 12)))
    for (const IWElement& tgt : targets)
      if (leq_subword(w, tgt, radius)) {
        out.insert(w);
        break;
      }
  return out;
}

}  // namespace alcove
