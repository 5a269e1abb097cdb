#include "stdeg/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace stdeg {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("json: " + what);
}

int require_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> require_int_array(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(require_int(x, what));
  return out;
}

std::string decimal_string(const Ratio& r) {
  std::ostringstream os;
  long long whole = r.numerator() / r.denominator();
  long long rem = r.numerator() % r.denominator();
  if (rem == 0) {
    os << whole;
    return os.str();
  }
  os.precision(10);
  os << boost::rational_cast<double>(r);
  return os.str();
}

}  // namespace

std::string answer_to_string(Answer a) {
  switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::budget_exhausted: return "budget_exhausted";
  }
  return "budget_exhausted";
}

Json certificate_to_json(const Certificate& cert, const Provenance* prov) {
  Json j;
  if (prov) {
    j["theorem"] = prov->construction;
    Json params = Json::object();
    for (const auto& [k, v] : prov->params) params[k] = v;
    j["params"] = params;
    if (prov->extension) j["extension"] = *prov->extension;
  }
  j["mode"] = cert.mode == Mode::type3 ? "type3" : "type4";
  j["shield"] = cert.shield;
  j["target"] = cert.target;
  Json ops = Json::array();
  for (const Op& op : cert.ops) {
    Json o;
    o["u"] = op.u;
    o["save"] = op.save;
    ops.push_back(std::move(o));
  }
  j["ops"] = std::move(ops);
  return j;
}

Certificate certificate_from_json(const Json& j) {
  if (!j.is_object()) bad("certificate must be an object");
  for (const char* key : {"mode", "shield", "target", "ops"})
    if (!j.contains(key)) bad(std::string("certificate needs \"") + key + "\"");
  Certificate cert;
  std::string mode = j["mode"].is_string() ? j["mode"].get<std::string>() : "";
  if (mode == "type3")
    cert.mode = Mode::type3;
  else if (mode == "type4")
    cert.mode = Mode::type4;
  else
    bad("mode must be \"type3\" or \"type4\"");
  cert.shield = require_int_array(j["shield"], "shield");
  cert.target = require_int_array(j["target"], "target");
  if (cert.shield.size() != cert.target.size())
    bad("shield and target must have equal length");
  if (!j["ops"].is_array()) bad("ops must be an array");
  for (const auto& o : j["ops"]) {
    if (!o.is_object() || !o.contains("u") || !o.contains("save"))
      bad("each op needs \"u\" and \"save\"");
    Op op;
    op.u = require_int(o["u"], "op u");
    op.save = require_int_array(o["save"], "op save");
    auto sorted = op.save;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      bad("op save lists a vertex twice");
    cert.ops.push_back(std::move(op));
  }
  return cert;
}

Json decide_result_to_json(const DecideResult& r) {
  Json j;
  j["answer"] = answer_to_string(r.answer);
  j["certificate"] = r.certificate ? certificate_to_json(*r.certificate)
                                   : Json(nullptr);
  j["states_expanded"] = r.states_expanded;
  return j;
}

Json ratio_to_json(const Ratio& r) {
  Json j;
  j["num"] = r.numerator();
  j["den"] = r.denominator();
  j["decimal"] = decimal_string(r);
  return j;
}

Json ratio_table_to_json(const RatioTable& table) {
  Json rows = Json::array();
  for (const RatioRow& r : table.rows) {
    Json row;
    row["t"] = r.t;
    row["exhausted"] = r.exhausted;
    row["s_min"] = r.exhausted ? Json(nullptr) : Json(r.s_min);
    row["ratio"] = r.exhausted ? Json(nullptr) : ratio_to_json(r.ratio);
    row["states_expanded"] = r.states_expanded;
    rows.push_back(std::move(row));
  }
  Json j;
  j["rows"] = std::move(rows);
  j["best_ratio"] =
      table.best_ratio ? ratio_to_json(*table.best_ratio) : Json(nullptr);
  j["complete"] = table.complete();
  return j;
}

Json cover_to_json(const Cover& cover) {
  Json j;
  j["a"] = cover.a;
  j["fibers"] = "implicit a-block layout";
  Json matchings = Json::array();
  for (size_t e = 0; e < cover.edge_list.size(); ++e) {
    Json m;
    m["edge"] = Json::array({cover.edge_list[e].first, cover.edge_list[e].second});
    std::vector<int> perm(cover.a, -1);
    for (auto [i, jj] : cover.matchings[e]) perm[i] = jj;
    m["perm"] = perm;
    matchings.push_back(std::move(m));
  }
  j["matchings"] = std::move(matchings);
  return j;
}

Cover cover_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("matchings"))
    bad("cover needs \"a\" and \"matchings\"");
  Cover cover;
  cover.a = require_int(j["a"], "a");
  if (cover.a < 1) bad("a must be >= 1");
  if (!j["matchings"].is_array()) bad("matchings must be an array");
  for (const auto& m : j["matchings"]) {
    if (!m.is_object() || !m.contains("edge") || !m.contains("perm"))
      bad("each matching needs \"edge\" and \"perm\"");
    auto ends = require_int_array(m["edge"], "edge");
    if (ends.size() != 2 || ends[0] >= ends[1] || ends[0] < 0)
      bad("edge must be [u, v] with 0 <= u < v");
    cover.edge_list.push_back({ends[0], ends[1]});
    auto perm = require_int_array(m["perm"], "perm");
    if (static_cast<int>(perm.size()) != cover.a)
      bad("perm must have length a");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < cover.a; ++i) {
      if (perm[i] == -1) continue;  // unmatched color
      if (perm[i] < 0 || perm[i] >= cover.a) bad("perm color out of range");
      pairs.push_back({i, perm[i]});
    }
    cover.matchings.push_back(std::move(pairs));
  }
  if (!std::is_sorted(cover.edge_list.begin(), cover.edge_list.end()))
    bad("matchings must list edges in sorted order");
  return cover;
}

Json transversal_to_json(const std::optional<Transversal>& t) {
  Json j;
  j["found"] = t.has_value();
  j["chosen"] = t ? Json(t->chosen) : Json(nullptr);
  return j;
}

Json dp_check_to_json(const DpCheckResult& r) {
  Json j;
  switch (r.verdict) {
    case DpVerdict::holds: j["verdict"] = "holds"; break;
    case DpVerdict::refuted: j["verdict"] = "refuted"; break;
    case DpVerdict::inconclusive: j["verdict"] = "inconclusive"; break;
  }
  j["covers_checked"] = r.covers_checked;
  j["covers_total"] = r.covers_total;
  j["witness"] = r.witness ? cover_to_json(*r.witness) : Json(nullptr);
  return j;
}

Json stdp_report_to_json(const StdpReport& r) {
  Json j;
  j["degeneracy"] = answer_to_string(r.degeneracy);
  j["states_expanded"] = r.states_expanded;
  j["dp_checked"] = r.dp_checked;
  j["dp"] = r.dp_checked ? dp_check_to_json(r.dp) : Json(nullptr);
  j["counterexample"] = r.counterexample;
  return j;
}

Json multipartite_to_json(const MultipartiteBound& b) {
  Json j;
  j["bound"] = b.bound;
  j["p_star"] = b.p_star;
  j["residuals"] = b.residuals;
  if (b.order_scan) {
    j["order_min"] = b.order_min;
    j["order_max"] = b.order_max;
  }
  return j;
}

}  // namespace stdeg
