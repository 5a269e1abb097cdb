// Drives the installed command-line binary as a subprocess and checks exit
// codes, stdout JSON, and the stderr manifest. STDEG_CLI_PATH comes from the
// build so the test always runs the binary it was built next to.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using Json = nlohmann::json;

namespace {

struct RunResult {
  int rc = -1;
  std::string out;
};

RunResult run_raw(const std::string& cmd) {
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
  int status = pclose(p);
  RunResult r;
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = std::move(out);
  return r;
}

// stdout only; the manifest on stderr is dropped
RunResult cli(const std::string& args) {
  return run_raw(std::string(STDEG_CLI_PATH) + " " + args + " 2>/dev/null");
}

// stderr only (the manifest), stdout dropped
RunResult cli_stderr(const std::string& args) {
  return run_raw(std::string(STDEG_CLI_PATH) + " " + args +
                 " 2>&1 1>/dev/null");
}

std::string tmp_path(const std::string& name) {
  return "/tmp/stdeg_cli_" + std::to_string(getpid()) + "_" + name;
}

std::string first_line(const std::string& s) {
  return s.substr(0, s.find('\n'));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

// graph files used across cases, generated through the CLI itself
std::string gen_graph(const std::string& family_args, const std::string& name) {
  std::string path = tmp_path(name);
  auto r = cli("gen " + family_args + " --out " + path);
  REQUIRE(r.rc == 0);
  return path;
}

}  // namespace

TEST_CASE("gen emits graphs in both formats") {
  auto r = cli("gen --family cycle --k 5");
  REQUIRE(r.rc == 0);
  Json j = Json::parse(first_line(r.out));
  CHECK(j["n"] == 5);
  CHECK(j["edges"].size() == 5);

  auto g6 = cli("gen --family path --k 4 --format graph6");
  REQUIRE(g6.rc == 0);
  CHECK(first_line(g6.out)[0] == 'C');  // 4 vertices

  auto sub = cli("gen --family cycle --k 4 --subdivide 2");
  REQUIRE(sub.rc == 0);
  Json js = Json::parse(first_line(sub.out));
  CHECK(js["n"] == 8);
  CHECK(js["edges"].size() == 8);

  // --out mirrors stdout into a file
  std::string path = tmp_path("mirror.json");
  auto mirrored = cli("gen --family cycle --k 5 --out " + path);
  REQUIRE(mirrored.rc == 0);
  CHECK(slurp(path) == first_line(mirrored.out) + "\n");
}

TEST_CASE("decide exit codes carry the answer") {
  std::string c5 = gen_graph("--family cycle --k 5", "c5.json");
  auto yes = cli("decide --graph " + c5 + " --s 3 --t 2");
  CHECK(yes.rc == 0);
  Json jy = Json::parse(first_line(yes.out));
  CHECK(jy["answer"] == "yes");
  CHECK(jy["certificate"]["ops"].size() == 10);

  auto no = cli("decide --graph " + c5 + " --s 2 --t 2 --type 4");
  CHECK(no.rc == 1);
  CHECK(Json::parse(first_line(no.out))["answer"] == "no");

  std::string c7 = gen_graph("--family cycle --k 7", "c7.json");
  auto starved = cli("decide --graph " + c7 + " --s 2 --t 2 --budget 1");
  CHECK(starved.rc == 3);
  CHECK(Json::parse(first_line(starved.out))["answer"] == "budget_exhausted");

  // the environment provides a budget; an explicit flag overrides it
  auto env_starved = run_raw("STDEG_BUDGET=1 " + std::string(STDEG_CLI_PATH) +
                             " decide --graph " + c7 +
                             " --s 2 --t 2 2>/dev/null");
  CHECK(env_starved.rc == 3);
  auto env_overridden =
      run_raw("STDEG_BUDGET=1 " + std::string(STDEG_CLI_PATH) +
              " decide --graph " + c7 +
              " --s 2 --t 2 --budget 1000000 2>/dev/null");
  CHECK(env_overridden.rc == 1);

  // graphs arrive on stdin with --graph -
  std::string payload = "{\"n\":3,\"edges\":[[0,1],[1,2]]}";
  auto piped = run_raw("printf '%s' '" + payload + "' | " +
                       std::string(STDEG_CLI_PATH) +
                       " decide --graph - --s 1 --t 1 2>/dev/null");
  CHECK(piped.rc == 0);
}

TEST_CASE("certify then verify round trips through files") {
  std::string c5 = gen_graph("--family cycle --k 5", "v_c5.json");
  std::string cert = tmp_path("odd2.json");
  auto made = cli("certify --family odd-cycle --r 2 --out " + cert);
  REQUIRE(made.rc == 0);
  Json jc = Json::parse(first_line(made.out));
  CHECK(jc["theorem"] == "odd-cycle");
  CHECK(jc["ops"].size() == 10);

  auto ok = cli("verify --graph " + c5 + " --cert " + cert);
  CHECK(ok.rc == 0);
  CHECK(Json::parse(first_line(ok.out))["verdict"] == "complete");

  Json doctored = Json::parse(slurp(cert));
  doctored["ops"].erase(doctored["ops"].size() - 1);
  std::string bad = tmp_path("odd2_short.json");
  spit(bad, doctored.dump());
  auto short_run = cli("verify --graph " + c5 + " --cert " + bad);
  CHECK(short_run.rc == 1);
  CHECK(Json::parse(first_line(short_run.out))["verdict"] ==
        "legal_but_incomplete");
}

TEST_CASE("usage problems exit 2, help exits 0") {
  CHECK(cli("").rc == 2);                       // no subcommand
  CHECK(cli("frobnicate").rc == 2);             // unknown subcommand
  CHECK(cli("decide --graph x.json").rc == 2);  // missing required flags
  CHECK(cli("gen --family path").rc == 2);      // family needs --k
  CHECK(cli("gen --family path --k 0").rc == 2);  // rejected by the builder
  std::string c5 = gen_graph("--family cycle --k 5", "u_c5.json");
  CHECK(cli("decide --graph " + c5 + " --s 2 --t 2 --type 5").rc == 2);
  CHECK(cli("decide --graph /nonexistent.json --s 1 --t 1").rc == 2);
  CHECK(cli("--help").rc == 0);
  CHECK(cli("decide --help").rc == 0);
}

TEST_CASE("scan rows are deterministic across job counts") {
  std::string c5 = gen_graph("--family cycle --k 5", "s_c5.json");
  auto par = cli("scan --graph " + c5 + " --t-max 2 --jobs 3");
  REQUIRE(par.rc == 0);
  Json j = Json::parse(first_line(par.out));
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][1]["s_min"] == 3);
  CHECK(j["best_ratio"]["num"] == 5);
  CHECK(j["best_ratio"]["den"] == 2);

  auto ser = cli("scan --graph " + c5 + " --t-max 2 --jobs 3 --deterministic");
  REQUIRE(ser.rc == 0);
  CHECK(ser.out == par.out);
}

TEST_CASE("cover oracles over the command line") {
  std::string c4 = gen_graph("--family cycle --k 4", "o_c4.json");
  auto refuted = cli("oracle check --graph " + c4 + " --a 2 --b 1");
  CHECK(refuted.rc == 1);
  CHECK(Json::parse(first_line(refuted.out))["verdict"] == "refuted");

  auto holds = cli("oracle check --graph " + c4 + " --a 3 --b 1");
  CHECK(holds.rc == 0);

  // refute defaults to sampling: it can refute or come back empty-handed
  auto found = cli("oracle refute --graph " + c4 +
                   " --a 2 --b 1 --samples 50 --seed 3");
  CHECK(found.rc == 1);
  auto empty = cli("oracle refute --graph " + c4 +
                   " --a 3 --b 1 --samples 20 --seed 3");
  CHECK(empty.rc == 3);
  CHECK(Json::parse(first_line(empty.out))["verdict"] == "inconclusive");

  std::string p2 = gen_graph("--family path --k 2", "o_p2.json");
  std::string cover = tmp_path("cover.json");
  spit(cover, R"({"a":2,"matchings":[{"edge":[0,1],"perm":[0,1]}]})");
  auto tr = cli("oracle transversal --graph " + p2 + " --a 2 --b 1 --cover " +
                cover);
  CHECK(tr.rc == 0);
  CHECK(Json::parse(first_line(tr.out))["found"] == true);

  auto rnd = cli("oracle transversal --graph " + c4 + " --a 2 --b 1 --seed 7");
  CHECK((rnd.rc == 0 || rnd.rc == 1));
  CHECK(Json::parse(first_line(rnd.out))["cover"]["matchings"].size() == 4);

  std::string p4 = gen_graph("--family path --k 4", "o_p4.json");
  auto stdp = cli("oracle stdp --graph " + p4 + " --s 1 --t 1");
  CHECK(stdp.rc == 0);
  Json js = Json::parse(first_line(stdp.out));
  CHECK(js["degeneracy"] == "yes");
  CHECK(js["counterexample"] == false);

  auto mp = cli("oracle multipartite --parts 2,7");
  CHECK(mp.rc == 0);
  Json jm = Json::parse(first_line(mp.out));
  CHECK(jm["bound"].get<double>() ==
        doctest::Approx(2.618033988751198).epsilon(1e-9));
  auto mps = cli("oracle multipartite --parts 2,7 --order-scan");
  CHECK(mps.rc == 0);
  CHECK(Json::parse(first_line(mps.out)).contains("order_min"));
}

TEST_CASE("selftest emits one line per check") {
  auto r = cli("selftest --only 1");
  CHECK(r.rc == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<Json> rows;
  while (std::getline(lines, line))
    if (!line.empty()) rows.push_back(Json::parse(line));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0]["id"] == 1);
  CHECK(rows[0]["pass"] == true);
  CHECK(rows[1] == Json{{"all_pass", true}});
}

TEST_CASE("manifest lands on stderr with the run's fingerprint") {
  std::string c5 = gen_graph("--family cycle --k 5", "m_c5.json");
  std::string args = "decide --graph " + c5 + " --s 3 --t 2";
  auto man = cli_stderr(args);
  Json j = Json::parse(first_line(man.out));
  CHECK(j["command"] == "decide");
  CHECK(j["parameters"]["s"] == 3);
  CHECK(j["parameters"]["t"] == 2);
  CHECK(j["budget"] == 10000000);
  CHECK(j["seed"].is_null());
  CHECK(j["version"] == "0.1.0");
  CHECK(j["wall_ms"].is_number());
  CHECK(j["digest"].get<std::string>().size() == 16);

  // same run, same outputs, same digest
  auto again = cli_stderr(args);
  Json j2 = Json::parse(first_line(again.out));
  CHECK(j2["digest"] == j["digest"]);

  // sampling runs record their seed
  auto sampled = cli_stderr("oracle refute --graph " + c5 +
                            " --a 3 --b 1 --samples 5 --seed 42");
  Json j3 = Json::parse(first_line(sampled.out));
  CHECK(j3["command"] == "oracle refute");
  CHECK(j3["seed"] == 42);
  CHECK(j3["parameters"]["strategy"] == "sampled");

  auto gen_man = cli_stderr("gen --family cycle --k 5");
  CHECK(Json::parse(first_line(gen_man.out))["command"] == "gen");
}
