#include "stdeg/search.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "stdeg/certgen.hpp"

namespace stdeg {

namespace {

constexpr int kMaxSearchVertices = 64;
constexpr int kMaxBranchDegree = 24;   // type-3 save sets enumerate subsets
constexpr size_t kDominanceBucketCap = 256;

enum class Tri { yes, no, cutoff };

}  // namespace

struct Search::Impl {
  const Graph& g;
  SearchConfig cfg;
  int n;

  // current position
  std::vector<int> S, T;
  uint64_t alive = 0;
  int alive_count = 0;
  std::vector<Op> path;

  // persistent across decide() calls: exact refuted positions, plus for each
  // alive set the refuted (shield, target) profiles for dominance pruning
  bool packable = false;  // n <= 8 and all weights < 16: positions fit a u64
  std::unordered_set<uint64_t> memo_packed;
  std::unordered_set<std::string> memo_generic;
  std::unordered_map<uint64_t, std::vector<std::vector<uint16_t>>> dominance;

  long long expanded = 0;
  bool exhausted = false;

  explicit Impl(const Graph& graph, const SearchConfig& c)
      : g(graph), cfg(c), n(graph.vertex_count()) {
    if (n > kMaxSearchVertices)
      throw std::invalid_argument("search: exact search supports at most 64 vertices");
    for (int v = 0; v < n; ++v)
      if (g.degree(v) > kMaxBranchDegree && cfg.mode == Mode::type3)
        throw std::invalid_argument("search: vertex degree too large for type-3 save enumeration");
  }

  bool is_alive(int v) const { return (alive >> v) & 1; }

  uint64_t packed_key() const {
    uint64_t k = 0;
    for (int v = 0; v < n; ++v)
      k |= (uint64_t((S[v] << 4) | T[v])) << (8 * v);
    return k;
  }

  std::string generic_key() const {
    std::string k(static_cast<size_t>(n) * 4, '\0');
    for (int v = 0; v < n; ++v) {
      k[4 * v + 0] = static_cast<char>(S[v] & 0xff);
      k[4 * v + 1] = static_cast<char>((S[v] >> 8) & 0xff);
      k[4 * v + 2] = static_cast<char>(T[v] & 0xff);
      k[4 * v + 3] = static_cast<char>((T[v] >> 8) & 0xff);
    }
    return k;
  }

  bool memo_has_current() const {
    return packable ? memo_packed.count(packed_key()) > 0
                    : memo_generic.count(generic_key()) > 0;
  }

  void memo_insert_current() {
    if (packable)
      memo_packed.insert(packed_key());
    else
      memo_generic.insert(generic_key());
  }

  std::vector<uint16_t> dominance_profile() const {
    std::vector<uint16_t> p;
    p.reserve(static_cast<size_t>(alive_count) * 2);
    for (int v = 0; v < n; ++v)
      if (is_alive(v)) {
        p.push_back(static_cast<uint16_t>(S[v]));
        p.push_back(static_cast<uint16_t>(T[v]));
      }
    return p;
  }

  // Monotonicity: a refuted profile with pointwise >= shields and <= targets
  // on the same alive set refutes the current position too.
  bool dominated_by_refuted() const {
    auto it = dominance.find(alive);
    if (it == dominance.end()) return false;
    auto cur = dominance_profile();
    for (const auto& ref : it->second) {
      bool dom = true;
      for (size_t i = 0; i < cur.size() && dom; i += 2)
        if (cur[i] > ref[i] || cur[i + 1] < ref[i + 1]) dom = false;
      if (dom) return true;
    }
    return false;
  }

  void record_refuted() {
    memo_insert_current();
    if (!cfg.dominance_pruning) return;
    auto& bucket = dominance[alive];
    auto cur = dominance_profile();
    // drop stored profiles the new one subsumes (its shields >=, targets <=)
    std::erase_if(bucket, [&](const std::vector<uint16_t>& old) {
      for (size_t i = 0; i < cur.size(); i += 2)
        if (cur[i] < old[i] || cur[i + 1] > old[i + 1]) return false;
      return true;
    });
    if (bucket.size() < kDominanceBucketCap) bucket.push_back(std::move(cur));
  }

  // A vertex u with z >= 2 alive zero-shield neighbors can only be shaded
  // after z-1 of them have been fully removed, and the final (forced plain)
  // shading that removes each one decrements S(u). Shields never grow, so
  // S(u) < z-1 means u can never reach its target: refuted. Only valid in
  // restricted mode, where one op saves at most one vertex.
  bool dead_state() const {
    for (int u = 0; u < n; ++u) {
      if (!is_alive(u)) continue;
      int z = 0;
      for (VertexId w : g.neighbors(u))
        if (is_alive(w) && S[w] == 0) ++z;
      if (z >= 2 && S[u] < z - 1) return true;
    }
    return false;
  }

  bool op_budget_ok(int u, const std::vector<VertexId>& save) const {
    long long budget = S[u] + T[u], spent = 0;
    for (VertexId w : save) spent += S[w] + T[w];
    return budget > spent;
  }

  bool op_shields_ok(int u, const std::vector<VertexId>& save) const {
    for (VertexId w : g.neighbors(u)) {
      if (!is_alive(w)) continue;
      if (std::find(save.begin(), save.end(), w) != save.end()) continue;
      if (S[w] == 0) return false;
    }
    return true;
  }

  void apply(const Op& op, int& old_t, int& old_s) {
    for (VertexId w : g.neighbors(op.u)) {
      if (!is_alive(w)) continue;
      if (std::find(op.save.begin(), op.save.end(), w) != op.save.end()) continue;
      --S[w];
    }
    old_t = T[op.u];
    old_s = S[op.u];
    if (T[op.u] == 1) {
      T[op.u] = 0;
      S[op.u] = 0;
      alive &= ~(uint64_t(1) << op.u);
      --alive_count;
    } else {
      --T[op.u];
    }
  }

  void undo(const Op& op, int old_t, int old_s) {
    if (T[op.u] == 0) {
      T[op.u] = old_t;
      S[op.u] = old_s;
      alive |= uint64_t(1) << op.u;
      ++alive_count;
    } else {
      ++T[op.u];
    }
    for (VertexId w : g.neighbors(op.u)) {
      if (!is_alive(w) || w == op.u) continue;
      if (std::find(op.save.begin(), op.save.end(), w) != op.save.end()) continue;
      ++S[w];
    }
  }

  std::vector<int> branch_vertices() const {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (is_alive(v)) vs.push_back(v);
    if (cfg.branch_order == SearchConfig::BranchOrder::max_budget_first)
      std::stable_sort(vs.begin(), vs.end(), [&](int a, int b) {
        return S[a] + T[a] > S[b] + T[b];
      });
    return vs;
  }

  // save-set candidates for shading u: the empty set, then singletons
  // (restricted mode) or all alive-neighbor subsets by increasing size
  std::vector<std::vector<VertexId>> save_options(int u) const {
    std::vector<VertexId> nbrs;
    for (VertexId w : g.neighbors(u))
      if (is_alive(w)) nbrs.push_back(w);
    std::vector<std::vector<VertexId>> out;
    out.push_back({});
    if (cfg.mode == Mode::type4) {
      for (VertexId w : nbrs) out.push_back({w});
      return out;
    }
    int d = static_cast<int>(nbrs.size());
    for (uint32_t mask = 1; mask < (uint32_t(1) << d); ++mask) {
      std::vector<VertexId> save;
      for (int i = 0; i < d; ++i)
        if ((mask >> i) & 1) save.push_back(nbrs[i]);
      out.push_back(std::move(save));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
  }

  Tri dfs() {
    if (alive_count == 0) return Tri::yes;
    if (memo_has_current()) return Tri::no;
    if (cfg.dominance_pruning && dominated_by_refuted()) {
      memo_insert_current();
      return Tri::no;
    }
    if (cfg.dead_state_pruning && cfg.mode == Mode::type4 && dead_state()) {
      record_refuted();
      return Tri::no;
    }
    if (++expanded > cfg.max_states) {
      exhausted = true;
      return Tri::cutoff;
    }
    bool cut = false;
    for (int u : branch_vertices()) {
      for (auto& save : save_options(u)) {
        if (exhausted) return Tri::cutoff;
        if (!op_budget_ok(u, save)) continue;
        if (!op_shields_ok(u, save)) continue;
        Op op{u, std::move(save)};
        std::sort(op.save.begin(), op.save.end());
        int old_t, old_s;
        apply(op, old_t, old_s);
        path.push_back(op);
        Tri r = dfs();
        if (r == Tri::yes) return Tri::yes;
        path.pop_back();
        undo(op, old_t, old_s);
        if (r == Tri::cutoff) cut = true;
      }
    }
    if (cut) return Tri::cutoff;
    record_refuted();
    return Tri::no;
  }

  DecideResult run(const std::vector<int>& shield, const std::vector<int>& target) {
    S = shield;
    T = target;
    alive = 0;
    alive_count = 0;
    for (int v = 0; v < n; ++v) {
      if (T[v] > 0) {
        alive |= uint64_t(1) << v;
        ++alive_count;
      } else {
        S[v] = 0;
      }
    }
    packable = n <= 8;
    for (int v = 0; v < n && packable; ++v)
      if (S[v] > 15 || T[v] > 15) packable = false;
    if (!packable) {
      for (int v = 0; v < n; ++v)
        if (S[v] > 0xffff || T[v] > 0xffff)
          throw std::invalid_argument("search: weights too large");
    }
    path.clear();
    expanded = 0;
    exhausted = false;

    DecideResult res;
    Tri r = dfs();
    res.states_expanded = expanded;
    if (r == Tri::yes) {
      res.answer = Answer::yes;
      Certificate c{cfg.mode, shield, target, path};
      auto check = verify_certificate(g, c);
      if (!check.ok()) throw std::logic_error("search: found sequence fails replay");
      res.certificate = std::move(c);
    } else if (r == Tri::no) {
      res.answer = Answer::no;
    } else {
      res.answer = Answer::budget_exhausted;
    }
    return res;
  }
};

Search::Search(const Graph& g, const SearchConfig& cfg)
    : impl_(std::make_unique<Impl>(g, cfg)) {}
Search::~Search() = default;

DecideResult Search::decide(const std::vector<int>& shield,
                            const std::vector<int>& target) {
  return impl_->run(shield, target);
}

namespace {

void validate_weights(const Graph& g, const std::vector<int>& shield,
                      const std::vector<int>& target) {
  size_t n = static_cast<size_t>(g.vertex_count());
  if (shield.size() != n || target.size() != n)
    throw std::invalid_argument("decide: shield/target length must match vertex count");
  for (size_t v = 0; v < n; ++v) {
    if (shield[v] < 0) throw std::invalid_argument("decide: negative shield");
    if (target[v] < 1) throw std::invalid_argument("decide: targets must be >= 1");
  }
}

// Back-degree certificate: if some degeneracy order satisfies
// shield(v) >= sum of targets over earlier neighbors, the graph is
// degenerate by plain shades alone.
std::optional<Certificate> greedy_attempt(const Graph& g,
                                          const std::vector<int>& shield,
                                          const std::vector<int>& target) {
  auto ord = degeneracy_ordering(g);
  std::vector<int> pos(g.vertex_count());
  for (size_t i = 0; i < ord.order.size(); ++i) pos[ord.order[i]] = static_cast<int>(i);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    long long back = 0;
    for (VertexId w : g.neighbors(v))
      if (pos[w] < pos[v]) back += target[w];
    if (shield[v] < back) return std::nullopt;
  }
  return greedy_certificate(g, ord.order, shield, target);
}

}  // namespace

DecideResult decide_degenerate(const Graph& g, const std::vector<int>& shield,
                               const std::vector<int>& target,
                               const SearchConfig& cfg) {
  validate_weights(g, shield, target);
  DecideResult res;
  if (auto c = greedy_attempt(g, shield, target)) {
    if (cfg.mode == Mode::type3) c->mode = Mode::type3;
    res.answer = Answer::yes;
    res.certificate = std::move(c);
    res.states_expanded = 0;
    return res;
  }
  auto rep = structure_queries(g);
  if (rep.components.size() <= 1) {
    Search s(g, cfg);
    return s.decide(shield, target);
  }
  // ops in different components never interact: solve each part separately
  std::vector<Certificate> parts;
  long long total = 0;
  bool any_exhausted = false;
  for (const auto& verts : rep.components) {
    Graph comp = induced_subgraph(g, verts);
    std::vector<int> cs, ct;
    for (VertexId v : verts) {
      cs.push_back(shield[v]);
      ct.push_back(target[v]);
    }
    Search s(comp, cfg);
    auto sub = s.decide(cs, ct);
    total += sub.states_expanded;
    if (sub.answer == Answer::no) return {Answer::no, std::nullopt, total};
    if (sub.answer == Answer::budget_exhausted) {
      any_exhausted = true;
      continue;
    }
    parts.push_back(std::move(*sub.certificate));
  }
  if (any_exhausted) return {Answer::budget_exhausted, std::nullopt, total};
  res.answer = Answer::yes;
  res.certificate = cert_components(g, parts);
  if (cfg.mode == Mode::type3) res.certificate->mode = Mode::type3;
  res.states_expanded = total;
  return res;
}

MinShieldResult min_uniform_shield(const Graph& g, int t, const SearchConfig& cfg) {
  if (t < 1) throw std::invalid_argument("min_uniform_shield: need t >= 1");
  auto ord = degeneracy_ordering(g);
  int ceiling = std::max(0, ord.col - 1) * t;
  auto rep = structure_queries(g);
  std::vector<Graph> comps;
  std::vector<std::unique_ptr<Search>> searches;
  for (const auto& verts : rep.components) {
    comps.push_back(induced_subgraph(g, verts));
    searches.push_back(std::make_unique<Search>(comps.back(), cfg));
  }
  MinShieldResult out;
  for (int s = 0; s <= ceiling; ++s) {
    std::vector<int> shield(g.vertex_count(), s), target(g.vertex_count(), t);
    if (greedy_attempt(g, shield, target)) {
      out.s_min = s;
      return out;
    }
    bool all_yes = true;
    for (size_t i = 0; i < comps.size() && all_yes; ++i) {
      std::vector<int> cs(comps[i].vertex_count(), s), ct(comps[i].vertex_count(), t);
      auto sub = searches[i]->decide(cs, ct);
      out.states_expanded += sub.states_expanded;
      if (sub.answer == Answer::budget_exhausted) {
        out.exhausted = true;
        out.s_min = s;
        return out;
      }
      if (sub.answer == Answer::no) all_yes = false;
    }
    if (all_yes) {
      out.s_min = s;
      return out;
    }
  }
  throw std::logic_error("min_uniform_shield: scan passed the guaranteed ceiling");
}

RatioTable ratio_scan(const Graph& g, int t_max, const SearchConfig& cfg, int jobs) {
  if (t_max < 1) throw std::invalid_argument("ratio_scan: need t_max >= 1");
  RatioTable table;
  table.rows.resize(t_max);
  auto run_row = [&](int t) {
    auto r = min_uniform_shield(g, t, cfg);
    RatioRow row;
    row.t = t;
    row.exhausted = r.exhausted;
    row.states_expanded = r.states_expanded;
    if (!r.exhausted) {
      row.s_min = r.s_min;
      row.ratio = Ratio(r.s_min + t, t);
    }
    table.rows[t - 1] = row;
  };
  if (jobs <= 1) {
    for (int t = 1; t <= t_max; ++t) run_row(t);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{1};
    int workers = std::min(jobs, t_max);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int t = next.fetch_add(1); t <= t_max; t = next.fetch_add(1)) run_row(t);
      });
    for (auto& th : pool) th.join();
  }
  for (const auto& row : table.rows)
    if (!row.exhausted && (!table.best_ratio || row.ratio < *table.best_ratio))
      table.best_ratio = row.ratio;
  return table;
}

}  // namespace stdeg
