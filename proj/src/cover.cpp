#include "stdeg/cover.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>

namespace stdeg {

namespace {

// Seeded Fisher-Yates so sampled runs replay identically everywhere
// (mt19937_64 is fully specified; distributions are not).
std::vector<int> random_permutation(int a, std::mt19937_64& rng) {
  std::vector<int> p(a);
  std::iota(p.begin(), p.end(), 0);
  for (int i = a - 1; i > 0; --i) {
    int j = static_cast<int>(rng() % static_cast<uint64_t>(i + 1));
    std::swap(p[i], p[j]);
  }
  return p;
}

std::vector<std::pair<int, int>> perm_matching(const std::vector<int>& p) {
  std::vector<std::pair<int, int>> m;
  for (int i = 0; i < static_cast<int>(p.size()); ++i) m.push_back({i, p[i]});
  return m;
}

}  // namespace

Cover build_cover(const Graph& g, int a, const CoverSpec& spec) {
  if (a < 1) throw std::invalid_argument("cover: need a >= 1");
  Cover c;
  c.a = a;
  c.edge_list = g.edges();
  if (spec.kind == CoverSpec::Kind::permutation_on_edges)
    for (const auto& [e, perm] : spec.perms)
      if (!std::binary_search(c.edge_list.begin(), c.edge_list.end(), e))
        throw std::invalid_argument("cover: permutation given for a non-edge");
  std::vector<int> identity(a);
  std::iota(identity.begin(), identity.end(), 0);
  std::mt19937_64 rng(spec.seed);
  for (const Edge& e : c.edge_list) {
    switch (spec.kind) {
      case CoverSpec::Kind::identity:
        c.matchings.push_back(perm_matching(identity));
        break;
      case CoverSpec::Kind::permutation_on_edges: {
        auto it = spec.perms.find(e);
        if (it == spec.perms.end()) {
          c.matchings.push_back(perm_matching(identity));
        } else {
          if (static_cast<int>(it->second.size()) != a)
            throw std::invalid_argument("cover: permutation has wrong length");
          c.matchings.push_back(perm_matching(it->second));
        }
        break;
      }
      case CoverSpec::Kind::random:
        c.matchings.push_back(perm_matching(random_permutation(a, rng)));
        break;
    }
  }
  validate_cover(g, c);
  return c;
}

void validate_cover(const Graph& g, const Cover& cover) {
  if (cover.a < 1) throw std::invalid_argument("cover: need a >= 1");
  if (cover.edge_list != g.edges())
    throw std::invalid_argument("cover: edge list does not match the base graph");
  if (cover.matchings.size() != cover.edge_list.size())
    throw std::invalid_argument("cover: need one matching per edge");
  for (const auto& m : cover.matchings) {
    std::vector<bool> left(cover.a, false), right(cover.a, false);
    for (auto [i, j] : m) {
      if (i < 0 || i >= cover.a || j < 0 || j >= cover.a)
        throw std::invalid_argument("cover: matching color out of range");
      if (left[i] || right[j])
        throw std::invalid_argument("cover: matching is not one-to-one");
      left[i] = right[j] = true;
    }
  }
}

namespace {

// forbidden[v] for the candidate choice at v given the already-chosen
// neighbors with smaller id; colors are bits of a 32-bit mask (a <= 31)
struct TransversalSearch {
  const Graph& g;
  const Cover& cover;
  int b;
  std::vector<uint32_t> chosen;  // per vertex; 0 = unassigned
  std::vector<std::vector<std::pair<int, const std::vector<std::pair<int, int>>*>>>
      earlier;                   // per v: (earlier neighbor u, matching, oriented)
  std::vector<std::vector<std::pair<int, int>>> flipped;  // storage for reversed
  std::vector<uint32_t> subsets; // all b-subsets of {0..a-1}, lex order

  TransversalSearch(const Graph& gg, const Cover& c, int bb)
      : g(gg), cover(c), b(bb), chosen(gg.vertex_count(), 0) {
    earlier.resize(g.vertex_count());
    // orient each matching from the later vertex's perspective; reserve first
    // so the stored pointers stay valid
    flipped.reserve(cover.edge_list.size());
    for (size_t e = 0; e < cover.edge_list.size(); ++e) {
      flipped.emplace_back();
      for (auto [i, j] : cover.matchings[e]) flipped.back().push_back({j, i});
    }
    for (size_t e = 0; e < cover.edge_list.size(); ++e) {
      auto [u, v] = cover.edge_list[e];  // u < v
      earlier[v].push_back({u, &flipped[e]});
    }
    for (uint32_t mask = 0; mask < (uint32_t(1) << cover.a); ++mask)
      if (std::popcount(mask) == b) subsets.push_back(mask);
  }

  bool solve(int v) {
    if (v == g.vertex_count()) return true;
    uint32_t forbid = 0;
    for (auto& [u, match] : earlier[v])
      for (auto [mine, theirs] : *match)
        if ((chosen[u] >> theirs) & 1) forbid |= uint32_t(1) << mine;
    for (uint32_t mask : subsets) {
      if (mask & forbid) continue;
      chosen[v] = mask;
      if (solve(v + 1)) return true;
    }
    chosen[v] = 0;
    return false;
  }
};

}  // namespace

std::optional<Transversal> find_transversal(const Graph& g, const Cover& cover,
                                            int b) {
  validate_cover(g, cover);
  if (b < 0 || b > cover.a)
    throw std::invalid_argument("transversal: need 0 <= b <= a");
  if (cover.a > 31)
    throw std::invalid_argument("transversal: supports a <= 31");
  TransversalSearch ts(g, cover, b);
  if (!ts.solve(0)) return std::nullopt;
  Transversal t;
  t.chosen.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int i = 0; i < cover.a; ++i)
      if ((ts.chosen[v] >> i) & 1) t.chosen[v].push_back(i);
  if (!validate_transversal(g, cover, t, b))
    throw std::logic_error("transversal: search result fails validation");
  return t;
}

bool validate_transversal(const Graph& g, const Cover& cover,
                          const Transversal& t, int b) {
  if (static_cast<int>(t.chosen.size()) != g.vertex_count()) return false;
  for (const auto& colors : t.chosen) {
    if (static_cast<int>(colors.size()) != b) return false;
    for (int c : colors)
      if (c < 0 || c >= cover.a) return false;
    for (size_t i = 1; i < colors.size(); ++i)
      if (colors[i] <= colors[i - 1]) return false;
  }
  for (size_t e = 0; e < cover.edge_list.size(); ++e) {
    auto [u, v] = cover.edge_list[e];
    for (auto [i, j] : cover.matchings[e]) {
      bool u_has = std::binary_search(t.chosen[u].begin(), t.chosen[u].end(), i);
      bool v_has = std::binary_search(t.chosen[v].begin(), t.chosen[v].end(), j);
      if (u_has && v_has) return false;
    }
  }
  return true;
}

namespace {

// BFS spanning tree from vertex 0; returns per-edge flag "is tree edge".
// Used to normalize covers: relabeling fibers makes tree matchings identity.
std::vector<bool> spanning_tree_edges(const Graph& g) {
  auto edges = g.edges();
  std::vector<bool> tree(edges.size(), false);
  int n = g.vertex_count();
  if (n == 0) return tree;
  std::vector<bool> seen(n, false);
  std::vector<int> queue{0};
  seen[0] = true;
  auto edge_index = [&](int u, int v) {
    Edge e{std::min(u, v), std::max(u, v)};
    return static_cast<size_t>(
        std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
  };
  for (size_t h = 0; h < queue.size(); ++h) {
    int v = queue[h];
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = true;
        tree[edge_index(v, w)] = true;
        queue.push_back(w);
      }
  }
  return tree;
}

long long factorial(int a) {
  long long f = 1;
  for (int i = 2; i <= a; ++i) f *= i;
  return f;
}

}  // namespace

DpCheckResult check_dp_colorable(const Graph& g, int a, int b,
                                 const Strategy& strategy) {
  if (a < 1 || b < 1 || b > a)
    throw std::invalid_argument("dp_check: need 1 <= b <= a");
  if (a > 12) throw std::invalid_argument("dp_check: supports a <= 12");
  DpCheckResult res;
  auto edges = g.edges();
  auto tree = spanning_tree_edges(g);
  std::vector<size_t> cotree;
  for (size_t e = 0; e < edges.size(); ++e)
    if (!tree[e]) cotree.push_back(e);

  auto try_cover = [&](const std::vector<std::vector<int>>& cotree_perms) -> bool {
    CoverSpec spec;
    spec.kind = CoverSpec::Kind::permutation_on_edges;
    for (size_t i = 0; i < cotree.size(); ++i)
      spec.perms[edges[cotree[i]]] = cotree_perms[i];
    Cover cover = build_cover(g, a, spec);
    ++res.covers_checked;
    if (!find_transversal(g, cover, b)) {
      // re-validate the refutation from scratch before trusting it
      validate_cover(g, cover);
      if (find_transversal(g, cover, b))
        throw std::logic_error("dp_check: non-deterministic transversal search");
      res.witness = std::move(cover);
      res.verdict = DpVerdict::refuted;
      return true;
    }
    return false;
  };

  if (strategy.kind == Strategy::Kind::exhaustive_normalized) {
    auto rep = structure_queries(g);
    if (rep.components.size() > 1)
      throw std::invalid_argument("dp_check: exhaustive strategy needs a connected graph");
    long long total = 1;
    for (size_t i = 0; i < cotree.size(); ++i) {
      total *= factorial(a);
      if (total > 10'000'000)
        throw std::invalid_argument("dp_check: normalized cover space too large");
    }
    res.covers_total = total;
    // odometer over one permutation per co-tree edge, lexicographic
    std::vector<std::vector<int>> perms(cotree.size());
    for (auto& p : perms) {
      p.resize(a);
      std::iota(p.begin(), p.end(), 0);
    }
    while (true) {
      if (try_cover(perms)) return res;
      int pos = static_cast<int>(cotree.size()) - 1;
      while (pos >= 0 && !std::next_permutation(perms[pos].begin(), perms[pos].end()))
        --pos;
      if (pos < 0) break;
    }
    res.verdict = DpVerdict::holds;
    return res;
  }

  // sampled: seeded random permutation per co-tree edge, identity on the tree
  std::mt19937_64 rng(strategy.seed);
  res.covers_total = -1;
  for (long long s = 0; s < strategy.samples; ++s) {
    std::vector<std::vector<int>> perms;
    for (size_t i = 0; i < cotree.size(); ++i)
      perms.push_back(random_permutation(a, rng));
    if (try_cover(perms)) return res;
  }
  res.verdict = DpVerdict::inconclusive;
  return res;
}

StdpReport check_stdp_implication(const Graph& g, int s, int t,
                                  const Strategy& strategy,
                                  const SearchConfig& cfg) {
  if (s < 0 || t < 1) throw std::invalid_argument("stdp: need s >= 0, t >= 1");
  StdpReport rep;
  SearchConfig c3 = cfg;
  c3.mode = Mode::type3;  // the implication starts from unrestricted degeneracy
  auto dec = decide_degenerate(g, std::vector<int>(g.vertex_count(), s),
                               std::vector<int>(g.vertex_count(), t), c3);
  rep.degeneracy = dec.answer;
  rep.states_expanded = dec.states_expanded;
  if (dec.answer != Answer::yes) return rep;
  rep.dp_checked = true;
  rep.dp = check_dp_colorable(g, s + t, t, strategy);
  rep.counterexample = (rep.dp.verdict == DpVerdict::refuted);
  return rep;
}

MultipartiteBound multipartite_bound(const std::vector<int>& parts,
                                     bool order_scan) {
  if (parts.empty())
    throw std::invalid_argument("multipartite: need at least one part");
  for (int p : parts)
    if (p < 1) throw std::invalid_argument("multipartite: part sizes must be >= 1");

  auto solve = [](const std::vector<int>& ns) {
    int m = static_cast<int>(ns.size());
    std::vector<double> p(m);
    p[m - 1] = 1.0;
    for (int j = m - 2; j >= 0; --j) {
      double c = p[j + 1];
      int k = ns[j];
      // root of f(p) = p - c (1-p)^k, strictly increasing on [0, 1]
      double lo = 0.0, hi = 1.0;
      while (hi - lo > 1e-12) {
        double mid = (lo + hi) / 2;
        if (mid - c * std::pow(1.0 - mid, k) >= 0)
          hi = mid;
        else
          lo = mid;
      }
      p[j] = (lo + hi) / 2;
    }
    return p;
  };

  MultipartiteBound out;
  out.p_star = solve(parts);
  out.bound = 1.0 / out.p_star[0];
  out.residuals.resize(parts.size(), 0.0);
  for (size_t j = 0; j + 1 < parts.size(); ++j)
    out.residuals[j] = std::abs(out.p_star[j] -
                                out.p_star[j + 1] *
                                    std::pow(1.0 - out.p_star[j], parts[j]));
  if (order_scan) {
    if (parts.size() > 8)
      throw std::invalid_argument("multipartite: order scan supports at most 8 parts");
    out.order_scan = true;
    std::vector<int> perm = parts;
    std::sort(perm.begin(), perm.end());
    out.order_min = out.order_max = out.bound;
    do {
      double b = 1.0 / solve(perm)[0];
      out.order_min = std::min(out.order_min, b);
      out.order_max = std::max(out.order_max, b);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

}  // namespace stdeg
