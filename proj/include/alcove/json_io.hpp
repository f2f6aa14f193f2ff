#pragma once

#include "alcove/adm_perm.hpp"
#include "json.hpp"

namespace alcove {

using nlohmann::json;

inline constexpr const char* kSchemaTag = "alcove-lab/1";

inline json to_json(const SignedPerm& s) { return json(s.window); }

inline json to_json(const IWElement& w) {
  return json{{"ctx", w.ctx.str()}, {"t", w.t}, {"s", w.s.window}};
}

inline json to_json(const ExtendedAlcove& alc) {
  json cols = json::array();
  for (const IntVec& v : alc.vs) cols.push_back(v);
  return cols;
}

inline json to_json(const AffineRoot& ar) {
  if (ar.is_short()) return json{{"i", ar.i}, {"d", ar.d}};
  return json{{"i", ar.i}, {"j", ar.j}, {"d", ar.d}};
}

inline json to_json(const LiftStep& step) {
  return json{{"root", to_json(step.root)},
              {"before", to_json(step.before)},
              {"after", to_json(step.after)}};
}

inline IWElement element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ctx") || !j.contains("t") || !j.contains("s"))
    throw std::invalid_argument("element_from_json: expected {\"ctx\",\"t\",\"s\"}");
  GroupCtx ctx = GroupCtx::parse(j.at("ctx").get<std::string>());
  IntVec t = j.at("t").get<IntVec>();
  std::vector<int> window = j.at("s").get<std::vector<int>>();
  return IWElement(ctx, std::move(t), SignedPerm(std::move(window)));
}

inline std::string join_ints(const IntVec& v, const char* sep = " ") {
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += sep;
    s += std::to_string(v[k]);
  }
  return s;
}

inline std::string join_window(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += sep;
    s += std::to_string(v[k]);
  }
  return s;
}

inline constexpr const char* kCsvHeader = "ctx,translation,window,length,in_adm,in_perm";

inline std::string csv_row(const IWElement& w, Int len, bool in_adm, bool in_perm) {
  return w.ctx.str() + "," + join_ints(w.t) + "," + join_window(w.s.window) + "," +
         std::to_string(len) + "," + (in_adm ? "1" : "0") + "," + (in_perm ? "1" : "0");
}

inline std::string text_row(const IWElement& w, Int len) {
  return "t=" + vec_str(w.t) + " s=[" + join_window(w.s.window, ",") + "] len=" + std::to_string(len);
}

}  // namespace alcove
