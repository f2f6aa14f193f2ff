#pragma once

#include <algorithm>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "alcove/json_io.hpp"
#include "alcove/oracle.hpp"

namespace alcove::cli {

// Exit contract: 0 success (compare: sets equal; steinberg: no violations),
// 1 strict containment / violations found, 2 invalid input, 3 guard exceeded.

inline IntVec parse_mu(const std::string& str, int rank) {
  IntVec mu;
  std::stringstream ss(str);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    mu.push_back(std::stoll(item, &pos));
    if (pos != item.size()) throw std::invalid_argument("bad cocharacter entry '" + item + "'");
  }
  if (static_cast<int>(mu.size()) != rank)
    throw std::invalid_argument("cocharacter must have " + std::to_string(rank) + " entries");
  return mu;
}

namespace detail {

struct Row {
  IWElement w;
  Int len;
  bool in_adm;
  bool in_perm;
};

inline bool leq_some_translation(const IWElement& w, const std::vector<IWElement>& targets) {
  for (const IWElement& t : targets)
    if (bruhat_leq(w, t)) return true;
  return false;
}

// canonical output order: by length, then by lexicographic encoding
inline std::vector<Row> make_rows(const std::set<IWElement>& elems, const IntVec& mu) {
  std::vector<IWElement> targets;
  if (!elems.empty())
    for (const IntVec& m : weyl_orbit(elems.begin()->ctx, mu))
      targets.push_back(IWElement::translation(elems.begin()->ctx, m));
  std::vector<Row> rows;
  for (const IWElement& w : elems)
    rows.push_back(Row{w, length(w), leq_some_translation(w, targets), is_permissible_def(w, mu)});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.len != b.len) return a.len < b.len;
    return a.w < b.w;
  });
  return rows;
}

inline void print_rows(std::ostream& out, const std::string& format, const std::string& command,
                       const GroupCtx& ctx, const IntVec& mu, const std::vector<Row>& rows,
                       const std::string& set_name) {
  if (format == "json") {
    json elems = json::array();
    for (const Row& r : rows) elems.push_back(to_json(r.w));
    json doc{{"schema", kSchemaTag}, {"command", command}, {"ctx", ctx.str()},
             {"mu", mu},             {"count", rows.size()}, {"elements", elems}};
    out << doc.dump() << "\n";
  } else if (format == "csv") {
    out << kCsvHeader << "\n";
    for (const Row& r : rows) out << csv_row(r.w, r.len, r.in_adm, r.in_perm) << "\n";
  } else {
    out << "# |" << set_name << "(" << vec_str(mu) << ")| = " << rows.size() << "\n";
    for (const Row& r : rows) out << text_row(r.w, r.len) << "\n";
  }
}

inline HullTest oracle_hull() {
  return [](const GroupCtx& c, const IntVec& m, const RatVec& x) {
    return hull_membership_vertices(c, m, x);
  };
}

inline int cmd_set(std::ostream& out, const std::string& ctx_str, const std::string& mu_str,
                   const std::string& format, bool oracle, bool admissible) {
  GroupCtx ctx = GroupCtx::parse(ctx_str);
  IntVec mu = parse_mu(mu_str, ctx.rank);
  std::set<IWElement> elems;
  if (admissible)
    elems = oracle ? admissible_bruteforce(ctx, mu) : admissible_set(ctx, mu);
  else
    elems = permissible_set(ctx, mu, oracle ? oracle_hull() : HullTest{});
  print_rows(out, format, admissible ? "adm" : "perm", ctx, mu, make_rows(elems, mu),
             admissible ? "Adm" : "Perm");
  return 0;
}

inline int cmd_compare(std::ostream& out, const std::string& ctx_str, const std::string& mu_str,
                       const std::string& format, bool oracle) {
  GroupCtx ctx = GroupCtx::parse(ctx_str);
  IntVec mu = parse_mu(mu_str, ctx.rank);
  std::set<IWElement> adm = oracle ? admissible_bruteforce(ctx, mu) : admissible_set(ctx, mu);
  std::set<IWElement> perm = permissible_set(ctx, mu, oracle ? oracle_hull() : HullTest{});
  std::set<IWElement> witnesses;
  for (const IWElement& w : perm)
    if (!adm.count(w)) witnesses.insert(w);
  for (const IWElement& w : adm)
    if (!perm.count(w))
      throw internal_error("compare: admissible element is not permissible: " + to_json(w).dump());
  bool equal = witnesses.empty();
  if (format == "json") {
    auto dump_set = [](const std::set<IWElement>& s) {
      json arr = json::array();
      for (const IWElement& w : s) arr.push_back(to_json(w));
      return arr;
    };
    json doc{{"schema", kSchemaTag}, {"command", "compare"}, {"ctx", ctx.str()},
             {"mu", mu},             {"adm", dump_set(adm)}, {"perm", dump_set(perm)},
             {"equal", equal},       {"witnesses", dump_set(witnesses)}};
    out << doc.dump() << "\n";
  } else if (format == "csv") {
    out << kCsvHeader << "\n";
    for (const Row& r : make_rows(perm, mu)) out << csv_row(r.w, r.len, r.in_adm, true) << "\n";
  } else {
    out << "|Adm(" << vec_str(mu) << ")| = " << adm.size() << "\n";
    out << "|Perm(" << vec_str(mu) << ")| = " << perm.size() << "\n";
    out << (equal ? "Adm = Perm" : "Adm is strictly contained in Perm") << "\n";
    for (const Row& r : make_rows(witnesses, mu))
      out << "witness: " << text_row(r.w, r.len) << "\n";
  }
  return equal ? 0 : 1;
}

inline int cmd_lift(std::ostream& out, std::ostream& err, const std::string& ctx_str,
                    const std::string& element_str, const std::string& format) {
  IWElement w = element_from_json(json::parse(element_str));
  if (!ctx_str.empty() && !(GroupCtx::parse(ctx_str) == w.ctx)) {
    err << "lift: --ctx disagrees with the element's context\n";
    return 2;
  }
  if (w.ctx.family != Family::D) {
    err << "lift: element must live in an even orthogonal context\n";
    return 2;
  }
  if (!is_permissible_alcove(w)) {
    err << "lift: element is not permissible\n";
    return 2;
  }
  std::vector<LiftStep> steps = lift_chain(w);
  IWElement final_elem = steps.empty() ? w : steps.back().after;
  if (format == "json") {
    json arr = json::array();
    for (const LiftStep& s : steps) {
      json step = to_json(s);
      step["length_before"] = length(s.before);
      step["length_after"] = length(s.after);
      arr.push_back(step);
    }
    json doc{{"schema", kSchemaTag},
             {"command", "lift"},
             {"ctx", w.ctx.str()},
             {"element", to_json(w)},
             {"steps", arr},
             {"final", to_json(final_elem)}};
    out << doc.dump() << "\n";
  } else {
    out << "element: " << text_row(w, length(w)) << "\n";
    for (const LiftStep& s : steps)
      out << "reflect by " << s.root.str() << " : len " << length(s.before) << " -> "
          << length(s.after) << " : " << text_row(s.after, length(s.after)) << "\n";
    out << "final translation: " << text_row(final_elem, length(final_elem)) << "\n";
  }
  return 0;
}

inline int cmd_steinberg(std::ostream& out, int n, Int maxlen, const std::string& format) {
  InheritanceReport rep = check_bruhat_inheritance(n, maxlen);
  if (format == "json") {
    json viol = json::array();
    for (const auto& [x, y] : rep.violations)
      viol.push_back(json{{"x", to_json(x)}, {"y", to_json(y)}});
    json doc{{"schema", kSchemaTag},
             {"command", "steinberg"},
             {"n", n},
             {"maxlen", maxlen},
             {"pairs_checked", rep.pairs_checked},
             {"violation_count", rep.violations.size()},
             {"violations", viol}};
    out << doc.dump() << "\n";
  } else {
    out << "pairs checked: " << rep.pairs_checked << "\n";
    out << "violations: " << rep.violations.size() << "\n";
    for (const auto& [x, y] : rep.violations)
      out << "  x=" << to_json(x).dump() << " y=" << to_json(y).dump() << "\n";
  }
  return rep.violations.empty() ? 0 : 1;
}

inline int cmd_search_gap(std::ostream& out, const std::string& ctx_str, Int max_entry,
                          const std::string& format) {
  GroupCtx ctx = GroupCtx::parse(ctx_str);
  std::vector<IntVec> within, skipped;
  for (const IntVec& mu : dominant_cochars(ctx, max_entry)) {
    Int len = length(IWElement::translation(ctx, mu));
    (len <= guard_limit(12) ? within : skipped).push_back(mu);
  }
  std::vector<GapResult> results = search_gap(ctx, within);
  if (format == "json") {
    json res = json::array();
    for (const GapResult& g : results) {
      json wits = json::array();
      for (const IWElement& w : g.witnesses) wits.push_back(to_json(w));
      res.push_back(json{{"mu", g.mu}, {"witnesses", wits}});
    }
    json doc{{"schema", kSchemaTag}, {"command", "search-gap"}, {"ctx", ctx.str()},
             {"max_entry", max_entry}, {"skipped", skipped},    {"results", res}};
    out << doc.dump() << "\n";
  } else {
    out << "scanned " << within.size() << " dominant cocharacters (skipped "
        << skipped.size() << " over the length guard)\n";
    for (const GapResult& g : results) {
      out << "gap at mu = " << vec_str(g.mu) << ": " << g.witnesses.size()
          << " permissible non-admissible element(s)\n";
      for (const IWElement& w : g.witnesses)
        out << "  " << text_row(w, length(w)) << "\n";
    }
    if (results.empty()) out << "no gaps found\n";
  }
  return 0;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Iwahori-Weyl group combinatorics for split classical groups"};
  app.name("alcove-lab");
  app.require_subcommand(1);

  std::string ctx_str, mu_str, element_str;
  std::string format = "text";
  bool oracle = false;
  int st_n = 2;
  Int st_maxlen = 3, max_entry = 2;

  auto add_common = [&](CLI::App* sub, bool with_mu) {
    sub->add_option("--ctx", ctx_str, "group context, e.g. D:3")->required();
    if (with_mu) sub->add_option("--mu", mu_str, "cocharacter, comma separated")->required();
    sub->add_option("--format", format, "text|json|csv");
  };

  CLI::App* adm = app.add_subcommand("adm", "enumerate the admissible set");
  add_common(adm, true);
  adm->add_flag("--oracle", oracle, "use the brute-force reference implementations");

  CLI::App* perm = app.add_subcommand("perm", "enumerate the permissible set");
  add_common(perm, true);
  perm->add_flag("--oracle", oracle, "use the brute-force reference implementations");

  CLI::App* compare = app.add_subcommand("compare", "compare admissible and permissible sets");
  add_common(compare, true);
  compare->add_flag("--oracle", oracle, "use the brute-force reference implementations");

  CLI::App* lift = app.add_subcommand("lift", "lift a permissible element to its translation part");
  lift->add_option("--ctx", ctx_str, "group context (must be D:<n>)");
  lift->add_option("--element", element_str, "element as JSON {\"ctx\",\"t\",\"s\"}")->required();
  lift->add_option("--format", format, "text|json");

  CLI::App* steinberg = app.add_subcommand("steinberg", "check odd-into-even Bruhat inheritance");
  steinberg->add_option("--n", st_n, "odd-side rank")->required();
  steinberg->add_option("--maxlen", st_maxlen, "ball radius");
  steinberg->add_option("--format", format, "text|json");

  CLI::App* gap = app.add_subcommand("search-gap", "scan cocharacters for Perm != Adm");
  gap->add_option("--ctx", ctx_str, "group context")->required();
  gap->add_option("--max-entry", max_entry, "scan dominant cocharacters with entries up to this");
  gap->add_option("--format", format, "text|json");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }
  if (format != "text" && format != "json" && format != "csv") {
    err << "unknown format '" << format << "'\n";
    return 2;
  }

  try {
    if (app.got_subcommand(adm)) return detail::cmd_set(out, ctx_str, mu_str, format, oracle, true);
    if (app.got_subcommand(perm))
      return detail::cmd_set(out, ctx_str, mu_str, format, oracle, false);
    if (app.got_subcommand(compare)) return detail::cmd_compare(out, ctx_str, mu_str, format, oracle);
    if (app.got_subcommand(lift))
      return detail::cmd_lift(out, err, ctx_str, element_str, format);
    if (app.got_subcommand(steinberg)) return detail::cmd_steinberg(out, st_n, st_maxlen, format);
    if (app.got_subcommand(gap)) return detail::cmd_search_gap(out, ctx_str, max_entry, format);
  } catch (const guard_error& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return 3;
  } catch (const json::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace alcove::cli
