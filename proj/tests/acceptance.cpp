// Acceptance suite: end-to-end checks of the headline identities, run at the
// exact sizes they are claimed at.  One pass/fail line per check; the exit
// code is the number of failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "alcove/adm_perm.hpp"
#include "alcove/json_io.hpp"
#include "alcove/oracle.hpp"
#include "test_util.hpp"

using namespace alcove;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& fn) {
  auto t0 = Clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  std::ostringstream line;
  line << (ok ? "[PASS] " : "[FAIL] ") << number << ". " << name;
  if (!detail.empty()) line << " — " << detail;
  line.precision(2);
  line << " (" << std::fixed << dt << "s)";
  std::cout << line.str() << std::endl;
  if (!ok) ++failures;
}

bool displacement_has_coroot_shape(const RatVec& d) {
  int two_n = static_cast<int>(d.size());
  for (int i = 1; i <= two_n; ++i)
    for (int j = 1; j <= two_n; ++j) {
      RatVec cand(d.size(), Rat(0));
      auto bump = [&](int idx, Rat v) {
        cand[static_cast<size_t>(idx - 1)] = cand[static_cast<size_t>(idx - 1)] + v;
      };
      bump(i, Rat(1, 2));
      bump(j, Rat(-1, 2));
      bump(star_index(j, two_n), Rat(1, 2));
      bump(star_index(i, two_n), Rat(-1, 2));
      if (cand == d) return true;
    }
  return false;
}

}  // namespace

int main() {
  criterion(1, "Adm(mu) = Perm(mu) for mu = (1,0^(n-1)), odd and even orthogonal, n = 2,3,4",
            [](std::string& detail) {
              auto t0 = Clock::now();
              std::ostringstream sizes;
              for (Family fam : {Family::D, Family::B})
                for (int n : {2, 3, 4}) {
                  GroupCtx ctx(fam, n);
                  IntVec mu = unit_cochar(ctx);
                  auto adm = admissible_set(ctx, mu);
                  auto perm = permissible_set(ctx, mu);
                  if (adm.empty() || adm != perm) {
                    detail = ctx.str() + ": |Adm|=" + std::to_string(adm.size()) +
                             " |Perm|=" + std::to_string(perm.size());
                    return false;
                  }
                  sizes << " " << ctx.str() << ":" << adm.size();
                }
              double dt = std::chrono::duration<double>(Clock::now() - t0).count();
              detail = "sizes" + sizes.str();
              if (dt >= 60.0) {
                detail += " but runtime " + std::to_string(dt) + "s >= 60s";
                return false;
              }
              return true;
            });

  criterion(2, "Adm(mu) subset of Perm(mu) over dominant mu with entries in {0,1,2}, rank <= 3",
            [](std::string& detail) {
              long long scanned = 0, skipped = 0, violations = 0;
              std::vector<GroupCtx> ctxs;
              for (int m : {1, 2, 3}) ctxs.emplace_back(Family::A, m);
              for (int n : {2, 3}) {
                ctxs.emplace_back(Family::B, n);
                ctxs.emplace_back(Family::D, n);
              }
              for (int n : {1, 2, 3}) ctxs.emplace_back(Family::C, n);
              for (const GroupCtx& ctx : ctxs)
                for (const IntVec& mu : dominant_cochars(ctx, 2)) {
                  if (length(IWElement::translation(ctx, mu)) > 8) {
                    ++skipped;
                    continue;
                  }
                  ++scanned;
                  for (const IWElement& w : admissible_set(ctx, mu))
                    if (!is_permissible_def(w, mu)) ++violations;
                }
              detail = std::to_string(scanned) + " cocharacters scanned, " +
                       std::to_string(skipped) + " over the length guard, " +
                       std::to_string(violations) + " violations";
              return violations == 0;
            });

  criterion(3, "pointwise and extended-alcove permissibility agree exhaustively, B and D, n = 2,3",
            [](std::string& detail) {
              long long checked = 0, disagreements = 0, permissible = 0;
              for (Family fam : {Family::D, Family::B})
                for (int n : {2, 3}) {
                  GroupCtx ctx(fam, n);
                  IntVec mu = unit_cochar(ctx);
                  std::vector<IntVec> boxes;
                  IntVec cur(static_cast<size_t>(n), 0);
                  std::function<void(int)> rec = [&](int pos) {
                    if (pos == n) {
                      boxes.push_back(cur);
                      return;
                    }
                    for (Int v = -2; v <= 2; ++v) {
                      cur[static_cast<size_t>(pos)] = v;
                      rec(pos + 1);
                    }
                  };
                  rec(0);
                  for (const SignedPerm& s : enumerate_signed(n, false))
                    for (const IntVec& t : boxes) {
                      IWElement w(ctx, t, s);
                      bool by_def = is_permissible_def(w, mu);
                      bool by_alcove = is_permissible_alcove(w);
                      ++checked;
                      if (by_def != by_alcove) ++disagreements;
                      if (by_def) ++permissible;
                    }
                }
              detail = std::to_string(checked) + " elements, " + std::to_string(permissible) +
                       " permissible, " + std::to_string(disagreements) + " disagreements";
              return disagreements == 0 && permissible > 0;
            });

  criterion(4, "constructive lifting verified for every permissible element, D, n = 2,3",
            [](std::string& detail) {
              long long lifted = 0;
              for (int n : {2, 3}) {
                GroupCtx ctx(Family::D, n);
                IntVec mu = unit_cochar(ctx);
                Int tmu_len = length(IWElement::translation(ctx, mu));
                for (const IWElement& w : permissible_set(ctx, mu)) {
                  if (!w.is_translation()) {
                    AffineRoot root = lift_reflection(w);
                    IWElement sw = multiply(reflection(ctx, root), w);
                    bool still_permissible = is_permissible_def(sw, mu);
                    bool increased = bruhat_leq(w, sw) && !(w == sw);
                    bool same_translation = w.t == sw.t;
                    if (!still_permissible || !increased || !same_translation) {
                      detail = "postcondition failed at " + to_json(w).dump();
                      return false;
                    }
                    auto chain = lift_chain(w);
                    if (static_cast<Int>(chain.size()) > tmu_len ||
                        !(chain.back().after == IWElement::translation(ctx, w.t))) {
                      detail = "chain failed at " + to_json(w).dump();
                      return false;
                    }
                    ++lifted;
                  }
                  if (!bruhat_leq(w, IWElement::translation(ctx, w.t))) {
                    detail = "element above its translation part: " + to_json(w).dump();
                    return false;
                  }
                }
              }
              detail = std::to_string(lifted) + " non-translation elements lifted";
              return lifted > 0;
            });

  criterion(5, "Bruhat order inherited through the odd-to-even embedding, n = 2, radius 4",
            [](std::string& detail) {
              auto t0 = Clock::now();
              InheritanceReport rep = check_bruhat_inheritance(2, 4);
              double dt = std::chrono::duration<double>(Clock::now() - t0).count();
              detail = std::to_string(rep.pairs_checked) + " pairs, " +
                       std::to_string(rep.violations.size()) + " violations";
              if (dt >= 120.0) {
                detail += ", runtime " + std::to_string(dt) + "s >= 120s";
                return false;
              }
              return rep.violations.empty();
            });

  criterion(6, "oracle equivalence: subword order, vertex-built hulls, brute-force admissibility",
            [](std::string& detail) {
              GroupCtx d2(Family::D, 2);
              long long pair_checks = 0;
              std::vector<IWElement> elems;
              for (const IWElement& om : omega_elements(d2))
                for (const IWElement& w : ball(d2, 5, om)) elems.push_back(w);
              for (const IWElement& a : elems)
                for (const IWElement& b : elems) {
                  ++pair_checks;
                  if (bruhat_leq(a, b) != leq_subword(a, b)) {
                    detail = "subword disagreement in the rank-2 ball";
                    return false;
                  }
                }
              GroupCtx d3(Family::D, 3);
              std::mt19937 rng(67);
              long long random_pairs = 0;
              while (random_pairs < 2000) {
                IWElement a = testutil::random_wa_element(d3, rng, 8);
                IWElement b = testutil::random_wa_element(d3, rng, 8);
                if (length(b) > 8) continue;
                ++random_pairs;
                if (bruhat_leq(a, b) != leq_subword(a, b)) {
                  detail = "subword disagreement on a random rank-3 pair";
                  return false;
                }
              }
              std::vector<std::pair<GroupCtx, IntVec>> hull_cases = {
                  {GroupCtx(Family::B, 2), {1, 1}},    {GroupCtx(Family::C, 2), {2, 1}},
                  {GroupCtx(Family::D, 2), {1, 0}},    {GroupCtx(Family::A, 2), {1, 0}},
                  {GroupCtx(Family::B, 3), {1, 0, 0}}, {GroupCtx(Family::B, 3), {2, 1, 0}},
                  {GroupCtx(Family::C, 3), {1, 1, 1}}, {GroupCtx(Family::D, 3), {1, 1, 1}},
                  {GroupCtx(Family::A, 3), {2, 1, 0}},
              };
              long long grid_points = 0;
              for (const auto& [ctx, mu] : hull_cases) {
                RatVec x(static_cast<size_t>(ctx.rank), Rat(0));
                std::function<bool(int)> rec = [&](int pos) -> bool {
                  if (pos == ctx.rank) {
                    ++grid_points;
                    return in_convex_hull(ctx, mu, x) == hull_membership_vertices(ctx, mu, x);
                  }
                  for (Int q = -8; q <= 8; ++q) {
                    x[static_cast<size_t>(pos)] = Rat(q, 4);
                    if (!rec(pos + 1)) return false;
                  }
                  return true;
                };
                if (!rec(0)) {
                  detail = "hull disagreement at " + ctx.str() + " mu=" + vec_str(mu);
                  return false;
                }
              }
              for (Family fam : {Family::B, Family::D}) {
                GroupCtx ctx(fam, 2);
                IntVec mu = unit_cochar(ctx);
                if (admissible_bruteforce(ctx, mu) != admissible_set(ctx, mu)) {
                  detail = "admissible sets differ at " + ctx.str();
                  return false;
                }
              }
              detail = std::to_string(pair_checks) + " ball pairs, 2000 random pairs, " +
                       std::to_string(grid_points) + " grid points, 2 set equalities";
              return true;
            });

  criterion(7, "offset bounds, parity, round trip on 1000 random elements; displacement shapes",
            [](std::string& detail) {
              std::mt19937 rng(71);
              long long tested = 0;
              for (Family fam : {Family::B, Family::D})
                for (int n : {2, 3, 4}) {
                  GroupCtx ctx(fam, n);
                  for (int trial = 0; trial < 1000; ++trial) {
                    IWElement w = testutil::random_element(ctx, rng);
                    ++tested;
                    if (!offset_bounds_hold(w)) {
                      detail = "offset bounds failed at " + to_json(w).dump();
                      return false;
                    }
                    auto offs = column_offsets(w);
                    IntVec diff = restrict_sym(sub(offs[0], offs[static_cast<size_t>(n)]));
                    if (w.s.is_even_in_s2n() != in_coroot_lattice(ctx, diff)) {
                      detail = "parity criterion failed at " + to_json(w).dump();
                      return false;
                    }
                    if (!(from_extended_alcove(ctx, to_extended_alcove(w)) == w)) {
                      detail = "round trip failed at " + to_json(w).dump();
                      return false;
                    }
                  }
                }
              for (Family fam : {Family::B, Family::D})
                for (int n : {2, 3}) {
                  GroupCtx ctx(fam, n);
                  for (const IWElement& w : permissible_set(ctx, unit_cochar(ctx)))
                    for (const RatVec& d : displacements(w))
                      if (!displacement_has_coroot_shape(d)) {
                        detail = "displacement shape failed at " + to_json(w).dump();
                        return false;
                      }
                }
              detail = std::to_string(tested) + " random elements, all permissible displacements";
              return true;
            });

  criterion(8, "a permissible-but-not-admissible witness exists in the odd rank-3 scan",
            [](std::string& detail) {
              GroupCtx ctx(Family::B, 3);
              auto gaps = search_gap(ctx, dominant_cochars(ctx, 2), 20);
              if (gaps.empty()) {
                detail = "no gap found over dominant entries <= 2";
                return false;
              }
              const GapResult& g = gaps.front();
              const IWElement& witness = *g.witnesses.begin();
              std::string serialized = to_json(witness).dump();
              IWElement reparsed = element_from_json(json::parse(serialized));
              if (!(reparsed == witness)) {
                detail = "witness does not survive serialization";
                return false;
              }
              if (!is_permissible_def(reparsed, g.mu)) {
                detail = "witness is not permissible";
                return false;
              }
              for (const IntVec& m : weyl_orbit(ctx, g.mu))
                if (leq_subword(reparsed, IWElement::translation(ctx, m), 20)) {
                  detail = "subword oracle says the witness is admissible";
                  return false;
                }
              detail = std::to_string(gaps.size()) + " gap cocharacter(s); first witness at mu=" +
                       vec_str(g.mu) + ": " + serialized;
              return true;
            });

  std::cout << (failures == 0 ? "all acceptance checks passed"
                              : std::to_string(failures) + " acceptance check(s) failed")
            << std::endl;
  return failures;
}
