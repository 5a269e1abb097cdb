#include "stdeg/stdeg_c.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "stdeg/certgen.hpp"
#include "stdeg/cover.hpp"
#include "stdeg/engine.hpp"
#include "stdeg/graph.hpp"
#include "stdeg/json_io.hpp"
#include "stdeg/search.hpp"
#include "stdeg/selfcheck.hpp"

struct stdeg_graph {
  stdeg::Graph g;
};
struct stdeg_cert {
  stdeg::Certificate c;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
stdeg_status guarded(F&& f) {
  try {
    f();
    t_last_error.clear();
    return STDEG_OK;
  } catch (const std::invalid_argument& e) {
    t_last_error = e.what();
    return STDEG_BAD_INPUT;
  } catch (const stdeg::GraphParseError& e) {
    t_last_error = e.what();
    return STDEG_BAD_INPUT;
  } catch (const stdeg::OpError& e) {
    t_last_error = e.what();
    return STDEG_BAD_INPUT;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return STDEG_INTERNAL;
  }
}

stdeg::GraphFormat parse_format(const char* format, const char* text) {
  using stdeg::GraphFormat;
  if (format) {
    std::string f = format;
    if (f == "edge_json") return GraphFormat::edge_json;
    if (f == "graph6") return GraphFormat::graph6;
    throw std::invalid_argument("unknown graph format: " + f);
  }
  // sniff: JSON object starts with '{'
  const char* p = text;
  while (*p == ' ' || *p == '\t' || *p == '\n' || *p == '\r') ++p;
  return *p == '{' ? GraphFormat::edge_json : GraphFormat::graph6;
}

stdeg::FamilySpec::Kind family_kind(const std::string& name) {
  using Kind = stdeg::FamilySpec::Kind;
  if (name == "path") return Kind::path;
  if (name == "cycle") return Kind::cycle;
  if (name == "complete-bipartite") return Kind::complete_bipartite;
  if (name == "complete-multipartite") return Kind::complete_multipartite;
  if (name == "single-vertex") return Kind::single_vertex;
  if (name == "edgeless") return Kind::edgeless;
  throw std::invalid_argument("unknown graph family: " + name);
}

stdeg::Mode parse_mode(int mode) {
  if (mode == 3) return stdeg::Mode::type3;
  if (mode == 4) return stdeg::Mode::type4;
  throw std::invalid_argument("mode must be 3 or 4");
}

stdeg::Strategy parse_strategy(const char* strategy, long long samples,
                               uint64_t seed) {
  stdeg::Strategy st;
  std::string s = strategy ? strategy : "exhaustive";
  if (s == "exhaustive") {
    st.kind = stdeg::Strategy::Kind::exhaustive_normalized;
  } else if (s == "sampled") {
    st.kind = stdeg::Strategy::Kind::sampled;
  } else {
    throw std::invalid_argument("strategy must be \"exhaustive\" or \"sampled\"");
  }
  st.samples = samples > 0 ? samples : 200;
  st.seed = seed;
  return st;
}

void need(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

long long effective_budget(long long budget) {
  return budget > 0 ? budget : 10'000'000;
}

}  // namespace

extern "C" {

const char* stdeg_version(void) { return "0.1.0"; }

const char* stdeg_last_error(void) { return t_last_error.c_str(); }

void stdeg_string_free(char* s) { std::free(s); }
void stdeg_graph_free(stdeg_graph* g) { delete g; }
void stdeg_cert_free(stdeg_cert* c) { delete c; }

stdeg_status stdeg_graph_parse(const char* text, const char* format,
                               stdeg_graph** out) {
  return guarded([&] {
    need(text && out, "graph_parse: text and out are required");
    auto g = stdeg::parse_graph(text, parse_format(format, text));
    *out = new stdeg_graph{std::move(g)};
  });
}

stdeg_status stdeg_graph_family(const char* family, const int* params,
                                int n_params, stdeg_graph** out) {
  return guarded([&] {
    need(family && out, "graph_family: family and out are required");
    need(n_params >= 0 && (n_params == 0 || params),
         "graph_family: bad params array");
    stdeg::FamilySpec spec;
    spec.kind = family_kind(family);
    spec.params.assign(params, params + n_params);
    *out = new stdeg_graph{stdeg::build_family(spec)};
  });
}

stdeg_status stdeg_graph_subdivide(const stdeg_graph* g, int length,
                                   stdeg_graph** out) {
  return guarded([&] {
    need(g && out, "graph_subdivide: graph and out are required");
    *out = new stdeg_graph{stdeg::subdivide_uniform(g->g, length)};
  });
}

stdeg_status stdeg_graph_serialize(const stdeg_graph* g, const char* format,
                                   char** out) {
  return guarded([&] {
    need(g && out, "graph_serialize: graph and out are required");
    auto fmt = parse_format(format, "{");  // default edge_json
    *out = dup_string(stdeg::serialize_graph(g->g, fmt));
  });
}

int stdeg_graph_vertex_count(const stdeg_graph* g) {
  return g ? g->g.vertex_count() : -1;
}

int stdeg_graph_edge_count(const stdeg_graph* g) {
  return g ? g->g.edge_count() : -1;
}

stdeg_status stdeg_cert_parse(const char* json_text, stdeg_cert** out) {
  return guarded([&] {
    need(json_text && out, "cert_parse: text and out are required");
    stdeg::Json j = stdeg::Json::parse(json_text, nullptr, false);
    if (j.is_discarded())
      throw std::invalid_argument("cert_parse: malformed JSON");
    *out = new stdeg_cert{stdeg::certificate_from_json(j)};
  });
}

stdeg_status stdeg_cert_serialize(const stdeg_cert* c, char** out) {
  return guarded([&] {
    need(c && out, "cert_serialize: cert and out are required");
    *out = dup_string(stdeg::certificate_to_json(c->c).dump());
  });
}

stdeg_status stdeg_decide(const stdeg_graph* g, int s, int t, int mode,
                          long long budget, char** result_json, int* answer) {
  return guarded([&] {
    need(g && result_json && answer, "decide: graph and outputs are required");
    stdeg::SearchConfig cfg;
    cfg.mode = parse_mode(mode);
    cfg.max_states = effective_budget(budget);
    auto res = stdeg::decide_degenerate(
        g->g, std::vector<int>(g->g.vertex_count(), s),
        std::vector<int>(g->g.vertex_count(), t), cfg);
    *result_json = dup_string(stdeg::decide_result_to_json(res).dump());
    switch (res.answer) {
      case stdeg::Answer::yes: *answer = 0; break;
      case stdeg::Answer::no: *answer = 1; break;
      case stdeg::Answer::budget_exhausted: *answer = 3; break;
    }
  });
}

stdeg_status stdeg_verify(const stdeg_graph* g, const stdeg_cert* c,
                          char** report_json, int* verdict) {
  return guarded([&] {
    need(g && c && report_json && verdict,
         "verify: graph, cert, and outputs are required");
    auto vr = stdeg::verify_certificate(g->g, c->c);
    stdeg::Json j;
    switch (vr.verdict) {
      case stdeg::Verdict::complete: j["verdict"] = "complete"; break;
      case stdeg::Verdict::legal_but_incomplete:
        j["verdict"] = "legal_but_incomplete";
        break;
      case stdeg::Verdict::illegal_at: j["verdict"] = "illegal_at"; break;
    }
    j["ops_applied"] = vr.ops_applied;
    if (vr.verdict == stdeg::Verdict::illegal_at) {
      j["fail_index"] = vr.fail_index;
      j["reason"] = vr.reason;
    }
    *report_json = dup_string(j.dump());
    *verdict = vr.ok() ? 0 : 1;
  });
}

stdeg_status stdeg_certify(const char* family, const int* params, int n_params,
                           const stdeg_graph* g, const int* x, int n_x,
                           stdeg_cert** out_cert, char** cert_json) {
  return guarded([&] {
    need(family && out_cert && cert_json,
         "certify: family and outputs are required");
    need(n_params >= 0 && (n_params == 0 || params),
         "certify: bad params array");
    std::string name = family;
    std::vector<int> p(params, params + n_params);
    auto want = [&](int k) {
      need(static_cast<int>(p.size()) == k,
           ("certify: wrong parameter count for " + name).c_str());
    };
    stdeg::Certificate cert;
    stdeg::Provenance prov;
    prov.construction = name;
    if (name == "even-cycle" || name == "even-cycle-plan") {
      want(2);
      cert = name == "even-cycle" ? stdeg::cert_even_cycle(p[0], p[1])
                                  : stdeg::even_cycle_plan(p[0], p[1]);
      prov.params = {{"r", p[0]}, {"t", p[1]}};
    } else if (name == "path") {
      want(2);
      cert = stdeg::cert_path(p[0], p[1]);
      prov.params = {{"k", p[0]}, {"r", p[1]}};
      if (p[0] == 1) prov.extension = "single-vertex-path";
    } else if (name == "odd-cycle") {
      want(1);
      cert = stdeg::cert_odd_cycle(p[0]);
      prov.params = {{"r", p[0]}};
    } else if (name == "complete-bipartite" ||
               name == "complete-bipartite-plan") {
      want(3);
      cert = name == "complete-bipartite"
                 ? stdeg::cert_complete_bipartite(p[0], p[1], p[2])
                 : stdeg::complete_bipartite_plan(p[0], p[1], p[2]);
      prov.params = {{"m", p[0]}, {"n", p[1]}, {"t", p[2]}};
    } else if (name == "linear-forest-reduction") {
      want(1);
      need(g != nullptr, "certify: linear-forest-reduction needs a graph");
      need(n_x >= 0 && (n_x == 0 || x), "certify: bad branch vertex array");
      std::vector<stdeg::VertexId> xs(x, x + n_x);
      cert = stdeg::cert_linear_forest_reduction(g->g, xs, p[0]);
      prov.params = {{"r", p[0]}};
    } else {
      throw std::invalid_argument("unknown certificate family: " + name);
    }
    *cert_json = dup_string(stdeg::certificate_to_json(cert, &prov).dump());
    *out_cert = new stdeg_cert{std::move(cert)};
  });
}

stdeg_status stdeg_scan(const stdeg_graph* g, int t_max, int mode,
                        long long budget, int jobs, char** result_json,
                        int* complete) {
  return guarded([&] {
    need(g && result_json && complete, "scan: graph and outputs are required");
    stdeg::SearchConfig cfg;
    cfg.mode = parse_mode(mode);
    cfg.max_states = effective_budget(budget);
    auto table = stdeg::ratio_scan(g->g, t_max, cfg, jobs > 0 ? jobs : 1);
    *result_json = dup_string(stdeg::ratio_table_to_json(table).dump());
    *complete = table.complete() ? 1 : 0;
  });
}

stdeg_status stdeg_oracle_transversal(const stdeg_graph* g, int a, int b,
                                      const char* cover_json, uint64_t seed,
                                      char** result_json, int* found) {
  return guarded([&] {
    need(g && result_json && found,
         "oracle_transversal: graph and outputs are required");
    stdeg::Cover cover;
    if (cover_json) {
      stdeg::Json j = stdeg::Json::parse(cover_json, nullptr, false);
      if (j.is_discarded())
        throw std::invalid_argument("oracle_transversal: malformed cover JSON");
      cover = stdeg::cover_from_json(j);
      need(cover.a == a, "oracle_transversal: cover fold differs from --a");
      stdeg::validate_cover(g->g, cover);
    } else {
      stdeg::CoverSpec spec;
      spec.kind = stdeg::CoverSpec::Kind::random;
      spec.seed = seed;
      cover = stdeg::build_cover(g->g, a, spec);
    }
    auto t = stdeg::find_transversal(g->g, cover, b);
    stdeg::Json j = stdeg::transversal_to_json(t);
    j["a"] = a;
    j["b"] = b;
    j["cover"] = stdeg::cover_to_json(cover);
    *result_json = dup_string(j.dump());
    *found = t.has_value() ? 1 : 0;
  });
}

stdeg_status stdeg_oracle_check(const stdeg_graph* g, int a, int b,
                                const char* strategy, long long samples,
                                uint64_t seed, char** result_json,
                                int* verdict) {
  return guarded([&] {
    need(g && result_json && verdict,
         "oracle_check: graph and outputs are required");
    auto res =
        stdeg::check_dp_colorable(g->g, a, b, parse_strategy(strategy, samples, seed));
    stdeg::Json j = stdeg::dp_check_to_json(res);
    j["a"] = a;
    j["b"] = b;
    *result_json = dup_string(j.dump());
    switch (res.verdict) {
      case stdeg::DpVerdict::holds: *verdict = 0; break;
      case stdeg::DpVerdict::refuted: *verdict = 1; break;
      case stdeg::DpVerdict::inconclusive: *verdict = 3; break;
    }
  });
}

stdeg_status stdeg_oracle_stdp(const stdeg_graph* g, int s, int t,
                               const char* strategy, long long samples,
                               uint64_t seed, long long budget,
                               char** result_json, int* outcome) {
  return guarded([&] {
    need(g && result_json && outcome,
         "oracle_stdp: graph and outputs are required");
    stdeg::SearchConfig cfg;
    cfg.max_states = effective_budget(budget);
    auto rep = stdeg::check_stdp_implication(
        g->g, s, t, parse_strategy(strategy, samples, seed), cfg);
    stdeg::Json j = stdeg::stdp_report_to_json(rep);
    j["s"] = s;
    j["t"] = t;
    *result_json = dup_string(j.dump());
    if (rep.counterexample)
      *outcome = 1;
    else if (rep.degeneracy == stdeg::Answer::budget_exhausted ||
             (rep.dp_checked &&
              rep.dp.verdict == stdeg::DpVerdict::inconclusive))
      *outcome = 3;
    else
      *outcome = 0;
  });
}

stdeg_status stdeg_oracle_multipartite(const int* parts, int n_parts,
                                       int order_scan, char** result_json) {
  return guarded([&] {
    need(result_json && n_parts > 0 && parts,
         "oracle_multipartite: parts and output are required");
    auto b = stdeg::multipartite_bound(std::vector<int>(parts, parts + n_parts),
                                       order_scan != 0);
    *result_json = dup_string(stdeg::multipartite_to_json(b).dump());
  });
}

stdeg_status stdeg_selftest(const int* which, int n_which, long long budget,
                            int jobs, char** result_json, int* all_pass) {
  return guarded([&] {
    need(result_json && all_pass, "selftest: outputs are required");
    stdeg::AcceptanceConfig cfg;
    cfg.budget = effective_budget(budget);
    cfg.jobs = jobs > 0 ? jobs : 1;
    std::vector<int> ids;
    if (which && n_which > 0) ids.assign(which, which + n_which);
    auto rows = stdeg::run_acceptance(cfg, ids);
    stdeg::Json arr = stdeg::Json::array();
    bool ok = true;
    for (const auto& row : rows) {
      stdeg::Json r;
      r["id"] = row.id;
      r["label"] = row.label;
      r["pass"] = row.pass;
      r["detail"] = row.detail;
      r["seconds"] = row.wall_seconds;
      r["line"] = stdeg::format_check_row(row);
      arr.push_back(std::move(r));
      ok = ok && row.pass;
    }
    stdeg::Json j;
    j["checks"] = std::move(arr);
    j["all_pass"] = ok;
    *result_json = dup_string(j.dump());
    *all_pass = ok ? 1 : 0;
  });
}

}  // extern "C"
