#pragma once

#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "stdeg/cover.hpp"
#include "stdeg/engine.hpp"
#include "stdeg/search.hpp"

namespace stdeg {

using Json = nlohmann::json;

// Optional header attached to generated certificates naming the
// construction that produced them.
struct Provenance {
  std::string construction;  // e.g. "odd-cycle", "complete-bipartite"
  std::map<std::string, long long> params;
  std::optional<std::string> extension;  // construction variant, when any
};

// {"mode":"type3"|"type4","shield":[...],"target":[...],
//  "ops":[{"u":<int>,"save":[<int>...]},...]}
// With provenance, the same object additionally carries
// "theorem": <construction slug> and "params": {...}.
Json certificate_to_json(const Certificate& cert,
                         const Provenance* prov = nullptr);
Certificate certificate_from_json(const Json& j);  // throws invalid_argument

// {"answer":"yes"|"no"|"budget_exhausted","certificate":<cert or null>,
//  "states_expanded":<int>}
Json decide_result_to_json(const DecideResult& r);

// Exact rational with a decimal rendering: {"num","den","decimal"}.
Json ratio_to_json(const Ratio& r);

// {"rows":[{"t","exhausted","s_min","ratio","states_expanded"},...],
//  "best_ratio":<ratio or null>} — s_min/ratio are null on exhausted rows.
Json ratio_table_to_json(const RatioTable& table);

// {"a":<int>,"fibers":"implicit a-block layout",
//  "matchings":[{"edge":[u,v],"perm":[...]},...]}
// perm[i] = matched color for left color i, -1 where unmatched.
Json cover_to_json(const Cover& cover);
Cover cover_from_json(const Json& j);  // throws invalid_argument

// {"found":<bool>,"chosen":[[...],...] or null}
Json transversal_to_json(const std::optional<Transversal>& t);

// {"verdict":"holds"|"refuted"|"inconclusive","covers_checked",
//  "covers_total","witness":<cover or null>}
Json dp_check_to_json(const DpCheckResult& r);

Json stdp_report_to_json(const StdpReport& r);

Json multipartite_to_json(const MultipartiteBound& b);

std::string answer_to_string(Answer a);

}  // namespace stdeg
