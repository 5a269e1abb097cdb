// Command-line front end. Everything goes through the shared-library C API;
// stdout carries one JSON line per result, stderr gets a run manifest.
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stdeg/stdeg_c.h"

using Json = nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string g_stdout_text;  // everything emitted, for the manifest digest

void emit(const std::string& line) {
  g_stdout_text += line;
  g_stdout_text += '\n';
  std::cout << line << '\n';
}

std::string fnv1a64_hex(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void check_api(stdeg_status st) {
  if (st != STDEG_OK) throw UsageError(stdeg_last_error());
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  stdeg_string_free(s);
  return out;
}

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

using GraphPtr = std::unique_ptr<stdeg_graph, void (*)(stdeg_graph*)>;
using CertPtr = std::unique_ptr<stdeg_cert, void (*)(stdeg_cert*)>;

GraphPtr load_graph(const std::string& path, const std::string& format) {
  std::string text = read_input(path);
  stdeg_graph* raw = nullptr;
  check_api(stdeg_graph_parse(text.c_str(),
                              format.empty() ? nullptr : format.c_str(), &raw));
  return {raw, stdeg_graph_free};
}

long long resolve_budget(long long flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("STDEG_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

}  // namespace

int main(int argc, char** argv) {
  auto t0 = std::chrono::steady_clock::now();

  CLI::App app{"exact fractional degeneracy toolkit"};
  app.require_subcommand(1);

  int rc = 0;
  std::string command;
  Json man_params = Json::object();
  Json man_seed;    // null unless randomness is in play
  Json man_budget;  // null unless a search/oracle budget applies

  // --- gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "build a graph from a named family");
  std::string gen_family, gen_format = "edge_json", gen_out;
  int gen_k = -1, gen_m = -1, gen_n = -1, gen_sub = 0;
  std::vector<int> gen_parts;
  gen->add_option("--family", gen_family,
                  "path|cycle|complete-bipartite|complete-multipartite|"
                  "single-vertex|edgeless")
      ->required();
  gen->add_option("--k", gen_k, "vertex count (path, cycle)");
  gen->add_option("--m", gen_m, "first part size (complete-bipartite)");
  gen->add_option("--n", gen_n, "second part size, or vertex count (edgeless)");
  gen->add_option("--parts", gen_parts, "part sizes (complete-multipartite)")
      ->delimiter(',');
  gen->add_option("--subdivide", gen_sub,
                  "replace every edge by a path with this many edges");
  gen->add_option("--format", gen_format, "output format")
      ->check(CLI::IsMember({"edge_json", "graph6"}));
  gen->add_option("--out", gen_out, "also write the graph to this file");
  gen->callback([&] {
    command = "gen";
    std::vector<int> fp;
    auto reqd = [&](int v, const char* flag) {
      if (v < 0)
        throw UsageError(std::string(flag) + " is required for " + gen_family);
      return v;
    };
    if (gen_family == "path" || gen_family == "cycle") {
      fp = {reqd(gen_k, "--k")};
    } else if (gen_family == "complete-bipartite") {
      fp = {reqd(gen_m, "--m"), reqd(gen_n, "--n")};
    } else if (gen_family == "complete-multipartite") {
      if (gen_parts.empty())
        throw UsageError("--parts is required for complete-multipartite");
      fp = gen_parts;
    } else if (gen_family == "edgeless") {
      fp = {reqd(gen_n, "--n")};
    } else if (gen_family != "single-vertex") {
      throw UsageError("unknown family: " + gen_family);
    }
    man_params = {{"family", gen_family},
                  {"params", fp},
                  {"subdivide", gen_sub},
                  {"format", gen_format}};
    stdeg_graph* raw = nullptr;
    check_api(stdeg_graph_family(gen_family.c_str(), fp.data(),
                                 static_cast<int>(fp.size()), &raw));
    GraphPtr g(raw, stdeg_graph_free);
    if (gen_sub > 0) {
      stdeg_graph* sub = nullptr;
      check_api(stdeg_graph_subdivide(g.get(), gen_sub, &sub));
      g.reset(sub);
    }
    char* text = nullptr;
    check_api(stdeg_graph_serialize(g.get(), gen_format.c_str(), &text));
    std::string payload = take_string(text);
    emit(payload);
    if (!gen_out.empty()) write_file(gen_out, payload + "\n");
  });

  // --- decide ---------------------------------------------------------------
  auto* decide = app.add_subcommand(
      "decide", "exhaustively decide uniform (s,t)-degeneracy");
  std::string dec_graph, dec_format;
  int dec_s = 0, dec_t = 1, dec_type = 4;
  long long dec_budget = 0;
  decide->add_option("--graph", dec_graph, "graph file, or - for stdin")
      ->required();
  decide->add_option("--s", dec_s, "uniform shield")->required();
  decide->add_option("--t", dec_t, "uniform target")->required();
  decide->add_option("--type", dec_type, "3 = any save set, 4 = save at most one")
      ->check(CLI::IsMember({3, 4}));
  decide->add_option("--budget", dec_budget, "max states expanded");
  decide->add_option("--format", dec_format, "override input format sniffing")
      ->check(CLI::IsMember({"edge_json", "graph6"}));
  decide->callback([&] {
    command = "decide";
    long long budget = resolve_budget(dec_budget);
    man_budget = budget;
    man_params = {
        {"graph", dec_graph}, {"s", dec_s}, {"t", dec_t}, {"type", dec_type}};
    GraphPtr g = load_graph(dec_graph, dec_format);
    char* res = nullptr;
    int answer = 0;
    check_api(
        stdeg_decide(g.get(), dec_s, dec_t, dec_type, budget, &res, &answer));
    emit(take_string(res));
    rc = answer;
  });

  // --- certify --------------------------------------------------------------
  auto* certify =
      app.add_subcommand("certify", "emit a closed-form certificate");
  std::string cf_family, cf_graph, cf_format, cf_out;
  int cf_r = -1, cf_t = -1, cf_k = -1, cf_m = -1, cf_n = -1;
  std::vector<int> cf_x;
  certify
      ->add_option("--family", cf_family,
                   "even-cycle|even-cycle-plan|path|odd-cycle|"
                   "complete-bipartite|complete-bipartite-plan|"
                   "linear-forest-reduction")
      ->required();
  certify->add_option("--r", cf_r, "target parameter r");
  certify->add_option("--t", cf_t, "target parameter t");
  certify->add_option("--k", cf_k, "path vertex count");
  certify->add_option("--m", cf_m, "first part size");
  certify->add_option("--n", cf_n, "second part size");
  certify->add_option("--graph", cf_graph,
                      "host graph (linear-forest-reduction)");
  certify->add_option("--x", cf_x, "branch vertices (linear-forest-reduction)")
      ->delimiter(',');
  certify->add_option("--format", cf_format, "override input format sniffing")
      ->check(CLI::IsMember({"edge_json", "graph6"}));
  certify->add_option("--out", cf_out, "also write the certificate here");
  certify->callback([&] {
    command = "certify";
    auto reqd = [&](int v, const char* flag) {
      if (v < 0)
        throw UsageError(std::string(flag) + " is required for " + cf_family);
      return v;
    };
    std::vector<int> fp;
    GraphPtr g(nullptr, stdeg_graph_free);
    if (cf_family == "even-cycle" || cf_family == "even-cycle-plan") {
      fp = {reqd(cf_r, "--r"), reqd(cf_t, "--t")};
    } else if (cf_family == "path") {
      fp = {reqd(cf_k, "--k"), reqd(cf_r, "--r")};
    } else if (cf_family == "odd-cycle") {
      fp = {reqd(cf_r, "--r")};
    } else if (cf_family == "complete-bipartite" ||
               cf_family == "complete-bipartite-plan") {
      fp = {reqd(cf_m, "--m"), reqd(cf_n, "--n"), reqd(cf_t, "--t")};
    } else if (cf_family == "linear-forest-reduction") {
      fp = {reqd(cf_r, "--r")};
      if (cf_graph.empty())
        throw UsageError("--graph is required for linear-forest-reduction");
      g = load_graph(cf_graph, cf_format);
    } else {
      throw UsageError("unknown certificate family: " + cf_family);
    }
    man_params = {{"family", cf_family}, {"params", fp}};
    if (!cf_x.empty()) man_params["x"] = cf_x;
    stdeg_cert* cert = nullptr;
    char* cj = nullptr;
    check_api(stdeg_certify(cf_family.c_str(), fp.data(),
                            static_cast<int>(fp.size()), g.get(), cf_x.data(),
                            static_cast<int>(cf_x.size()), &cert, &cj));
    stdeg_cert_free(cert);
    std::string payload = take_string(cj);
    emit(payload);
    if (!cf_out.empty()) write_file(cf_out, payload + "\n");
  });

  // --- verify ---------------------------------------------------------------
  auto* verify =
      app.add_subcommand("verify", "replay and check a certificate");
  std::string vf_graph, vf_cert, vf_format;
  verify->add_option("--graph", vf_graph, "graph file, or - for stdin")
      ->required();
  verify->add_option("--cert", vf_cert, "certificate file, or - for stdin")
      ->required();
  verify->add_option("--format", vf_format, "override input format sniffing")
      ->check(CLI::IsMember({"edge_json", "graph6"}));
  verify->callback([&] {
    command = "verify";
    man_params = {{"graph", vf_graph}, {"cert", vf_cert}};
    GraphPtr g = load_graph(vf_graph, vf_format);
    stdeg_cert* raw = nullptr;
    check_api(stdeg_cert_parse(read_input(vf_cert).c_str(), &raw));
    CertPtr c(raw, stdeg_cert_free);
    char* rep = nullptr;
    int verdict = 0;
    check_api(stdeg_verify(g.get(), c.get(), &rep, &verdict));
    emit(take_string(rep));
    rc = verdict == 0 ? 0 : 1;
  });

  // --- scan -----------------------------------------------------------------
  auto* scan = app.add_subcommand(
      "scan", "minimum uniform shield and exact ratio per t = 1..t_max");
  std::string sc_graph, sc_format;
  int sc_tmax = 1, sc_type = 4, sc_jobs = 1;
  long long sc_budget = 0;
  bool sc_det = false;
  scan->add_option("--graph", sc_graph, "graph file, or - for stdin")
      ->required();
  scan->add_option("--t-max", sc_tmax, "largest target to scan")->required();
  scan->add_option("--type", sc_type, "3 or 4")
      ->check(CLI::IsMember({3, 4}));
  scan->add_option("--budget", sc_budget, "max states expanded per decision");
  scan->add_option("--jobs", sc_jobs, "parallel rows");
  scan->add_flag("--deterministic", sc_det, "force single-threaded");
  scan->add_option("--format", sc_format, "override input format sniffing")
      ->check(CLI::IsMember({"edge_json", "graph6"}));
  scan->callback([&] {
    command = "scan";
    long long budget = resolve_budget(sc_budget);
    man_budget = budget;
    int jobs = sc_det ? 1 : sc_jobs;
    man_params = {{"graph", sc_graph},
                  {"t_max", sc_tmax},
                  {"type", sc_type},
                  {"jobs", jobs}};
    GraphPtr g = load_graph(sc_graph, sc_format);
    char* res = nullptr;
    int complete = 0;
    check_api(
        stdeg_scan(g.get(), sc_tmax, sc_type, budget, jobs, &res, &complete));
    emit(take_string(res));
    rc = complete ? 0 : 3;
  });

  // --- oracle ----------------------------------------------------------------
  auto* oracle = app.add_subcommand("oracle", "cover-based coloring checks");
  oracle->require_subcommand(1);

  auto* otr = oracle->add_subcommand(
      "transversal", "search one cover for a b-fold independent transversal");
  std::string otr_graph, otr_format, otr_cover;
  int otr_a = 1, otr_b = 1;
  uint64_t otr_seed = 1;
  otr->add_option("--graph", otr_graph, "graph file, or - for stdin")
      ->required();
  otr->add_option("--a", otr_a, "fold of the cover")->required();
  otr->add_option("--b", otr_b, "transversal width")->required();
  otr->add_option("--cover", otr_cover,
                  "cover JSON file (omitted: seeded random cover)");
  otr->add_option("--seed", otr_seed, "seed for the random cover");
  otr->add_option("--format", otr_format, "override input format sniffing")
      ->check(CLI::IsMember({"edge_json", "graph6"}));
  otr->callback([&] {
    command = "oracle transversal";
    man_params = {{"graph", otr_graph}, {"a", otr_a}, {"b", otr_b}};
    std::string cover_text;
    if (!otr_cover.empty()) {
      cover_text = read_input(otr_cover);
      man_params["cover"] = otr_cover;
    } else {
      man_seed = otr_seed;
    }
    GraphPtr g = load_graph(otr_graph, otr_format);
    char* res = nullptr;
    int found = 0;
    check_api(stdeg_oracle_transversal(
        g.get(), otr_a, otr_b, otr_cover.empty() ? nullptr : cover_text.c_str(),
        otr_seed, &res, &found));
    emit(take_string(res));
    rc = found ? 0 : 1;
  });

  std::string oc_graph, oc_format, oc_strategy;
  int oc_a = 1, oc_b = 1;
  long long oc_samples = 200;
  uint64_t oc_seed = 1;
  auto add_check_flags = [&](CLI::App* cmd, const char* default_strategy) {
    cmd->add_option("--graph", oc_graph, "graph file, or - for stdin")
        ->required();
    cmd->add_option("--a", oc_a, "fold of the cover")->required();
    cmd->add_option("--b", oc_b, "transversal width")->required();
    cmd->add_option("--strategy", oc_strategy,
                    std::string("exhaustive|sampled (default ") +
                        default_strategy + ")")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    cmd->add_option("--samples", oc_samples, "covers drawn when sampled");
    cmd->add_option("--seed", oc_seed, "seed when sampled");
    cmd->add_option("--format", oc_format, "override input format sniffing")
        ->check(CLI::IsMember({"edge_json", "graph6"}));
  };
  auto run_check = [&](const char* name, const char* default_strategy) {
    command = name;
    std::string strategy =
        oc_strategy.empty() ? default_strategy : oc_strategy;
    man_params = {{"graph", oc_graph},
                  {"a", oc_a},
                  {"b", oc_b},
                  {"strategy", strategy}};
    if (strategy == "sampled") {
      man_params["samples"] = oc_samples;
      man_seed = oc_seed;
    }
    GraphPtr g = load_graph(oc_graph, oc_format);
    char* res = nullptr;
    int verdict = 0;
    check_api(stdeg_oracle_check(g.get(), oc_a, oc_b, strategy.c_str(),
                                 oc_samples, oc_seed, &res, &verdict));
    emit(take_string(res));
    rc = verdict;
  };

  auto* och = oracle->add_subcommand(
      "check", "decide (a,b)-colorability over normalized covers");
  add_check_flags(och, "exhaustive");
  och->callback([&] { run_check("oracle check", "exhaustive"); });

  auto* orf = oracle->add_subcommand(
      "refute", "hunt for a cover without a transversal");
  add_check_flags(orf, "sampled");
  orf->callback([&] { run_check("oracle refute", "sampled"); });

  auto* ost = oracle->add_subcommand(
      "stdp", "cross-check degeneracy at (s,t) against covers at (s+t,t)");
  std::string ost_graph, ost_format, ost_strategy = "exhaustive";
  int ost_s = 0, ost_t = 1;
  long long ost_samples = 200, ost_budget = 0;
  uint64_t ost_seed = 1;
  ost->add_option("--graph", ost_graph, "graph file, or - for stdin")
      ->required();
  ost->add_option("--s", ost_s, "uniform shield")->required();
  ost->add_option("--t", ost_t, "uniform target")->required();
  ost->add_option("--strategy", ost_strategy, "exhaustive|sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  ost->add_option("--samples", ost_samples, "covers drawn when sampled");
  ost->add_option("--seed", ost_seed, "seed when sampled");
  ost->add_option("--budget", ost_budget, "max states expanded");
  ost->add_option("--format", ost_format, "override input format sniffing")
      ->check(CLI::IsMember({"edge_json", "graph6"}));
  ost->callback([&] {
    command = "oracle stdp";
    long long budget = resolve_budget(ost_budget);
    man_budget = budget;
    man_params = {{"graph", ost_graph},
                  {"s", ost_s},
                  {"t", ost_t},
                  {"strategy", ost_strategy}};
    if (ost_strategy == "sampled") {
      man_params["samples"] = ost_samples;
      man_seed = ost_seed;
    }
    GraphPtr g = load_graph(ost_graph, ost_format);
    char* res = nullptr;
    int outcome = 0;
    check_api(stdeg_oracle_stdp(g.get(), ost_s, ost_t, ost_strategy.c_str(),
                                ost_samples, ost_seed, budget, &res, &outcome));
    emit(take_string(res));
    rc = outcome;
  });

  auto* omp = oracle->add_subcommand(
      "multipartite", "fractional bound for a complete multipartite graph");
  std::vector<int> omp_parts;
  bool omp_order_scan = false;
  omp->add_option("--parts", omp_parts, "part sizes, e.g. 2,7")
      ->required()
      ->delimiter(',');
  omp->add_flag("--order-scan", omp_order_scan,
                "also evaluate every part ordering (exploratory)");
  omp->callback([&] {
    command = "oracle multipartite";
    man_params = {{"parts", omp_parts}, {"order_scan", omp_order_scan}};
    char* res = nullptr;
    check_api(stdeg_oracle_multipartite(omp_parts.data(),
                                        static_cast<int>(omp_parts.size()),
                                        omp_order_scan ? 1 : 0, &res));
    emit(take_string(res));
  });

  // --- selftest ---------------------------------------------------------------
  auto* st = app.add_subcommand(
      "selftest", "run the acceptance suite (one JSON line per check)");
  std::vector<int> st_only;
  long long st_budget = 0;
  int st_jobs = 1;
  bool st_det = false;
  st->add_option("--only", st_only, "check ids to run, e.g. 1,3,10")
      ->delimiter(',');
  st->add_option("--budget", st_budget, "max states expanded per decision");
  st->add_option("--jobs", st_jobs, "parallel checks");
  st->add_flag("--deterministic", st_det, "force single-threaded");
  st->callback([&] {
    command = "selftest";
    long long budget = resolve_budget(st_budget);
    man_budget = budget;
    int jobs = st_det ? 1 : st_jobs;
    man_params = {{"only", st_only}, {"jobs", jobs}};
    char* res = nullptr;
    int all_pass = 0;
    check_api(stdeg_selftest(st_only.empty() ? nullptr : st_only.data(),
                             static_cast<int>(st_only.size()), budget, jobs,
                             &res, &all_pass));
    Json j = Json::parse(take_string(res));
    for (const auto& row : j["checks"]) emit(row.dump());
    emit(Json{{"all_pass", j["all_pass"]}}.dump());
    rc = all_pass ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits 0, anything else is usage
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    rc = 2;
  }

  if (!command.empty()) {
    double wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    Json manifest = {{"command", command},       {"parameters", man_params},
                     {"seed", man_seed},         {"budget", man_budget},
                     {"version", stdeg_version()}, {"wall_ms", wall_ms},
                     {"digest", fnv1a64_hex(g_stdout_text)}};
    std::cerr << manifest.dump() << '\n';
  }
  return rc;
}
