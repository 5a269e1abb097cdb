#include "stdeg/engine.hpp"

#include <algorithm>
#include <numeric>

namespace stdeg {

State::State(const Graph& g, std::vector<int> shield, std::vector<int> target)
    : g_(&g), shield_(std::move(shield)), target_(std::move(target)) {
  size_t n = static_cast<size_t>(g.vertex_count());
  if (shield_.size() != n || target_.size() != n)
    throw std::invalid_argument("state: shield/target length must match vertex count");
  alive_count_ = 0;
  for (size_t v = 0; v < n; ++v) {
    if (shield_[v] < 0) throw std::invalid_argument("state: negative shield");
    if (target_[v] < 0) throw std::invalid_argument("state: negative target");
    if (target_[v] > 0) ++alive_count_;
    if (target_[v] == 0) shield_[v] = 0;  // dead vertices carry no shield
  }
}

long long State::total_target() const {
  return std::accumulate(target_.begin(), target_.end(), 0LL);
}

std::vector<VertexId> State::alive_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g_->vertex_count(); ++v)
    if (alive(v)) out.push_back(v);
  return out;
}

std::string State::canonical_key() const {
  // alive bitmask (little-endian bytes), then (shield, target) of each alive
  // vertex in id order, two bytes per value
  int n = g_->vertex_count();
  std::string key((n + 7) / 8, '\0');
  for (int v = 0; v < n; ++v)
    if (alive(v)) key[v / 8] |= static_cast<char>(1 << (v % 8));
  for (int v = 0; v < n; ++v) {
    if (!alive(v)) continue;
    key.push_back(static_cast<char>(shield_[v] & 0xff));
    key.push_back(static_cast<char>((shield_[v] >> 8) & 0xff));
    key.push_back(static_cast<char>(target_[v] & 0xff));
    key.push_back(static_cast<char>((target_[v] >> 8) & 0xff));
  }
  return key;
}

bool State::operator==(const State& o) const {
  return g_ == o.g_ && shield_ == o.shield_ && target_ == o.target_;
}

namespace {

void structural_check(const State& st, const Op& op) {
  if (!st.graph().has_vertex(op.u))
    throw OpError(OpError::Kind::bad_vertex, "op: no such vertex");
  if (!st.alive(op.u))
    throw OpError(OpError::Kind::dead_vertex, "op: shaded vertex is not alive");
  for (size_t i = 0; i < op.save.size(); ++i) {
    VertexId w = op.save[i];
    if (!st.graph().has_vertex(w))
      throw OpError(OpError::Kind::bad_vertex, "op: save set names no such vertex");
    for (size_t j = 0; j < i; ++j)
      if (op.save[j] == w)
        throw OpError(OpError::Kind::duplicate_save, "op: duplicate vertex in save set");
    if (!st.alive(w) || !st.graph().adjacent(op.u, w))
      throw OpError(OpError::Kind::not_neighbor,
                    "op: save set not contained in the alive neighborhood");
  }
}

bool saved(const std::vector<VertexId>& save, VertexId x) {
  return std::find(save.begin(), save.end(), x) != save.end();
}

}  // namespace

LegalCheck is_legal(const State& st, const Op& op) {
  structural_check(st, op);
  long long budget = st.shield(op.u) + st.target(op.u);
  long long spent = 0;
  for (VertexId w : op.save) spent += st.shield(w) + st.target(w);
  if (budget <= spent) return {false, LegalFail::budget};
  for (VertexId w : st.graph().neighbors(op.u)) {
    if (!st.alive(w) || saved(op.save, w)) continue;
    if (st.shield(w) == 0) return {false, LegalFail::shield_underflow};
  }
  return {true, LegalFail::none};
}

State apply_shadesave(const State& st, const Op& op) {
  auto chk = is_legal(st, op);
  if (!chk.legal) throw std::logic_error("apply_shadesave: op is not legal");
  State out = st;
  for (VertexId w : st.graph().neighbors(op.u)) {
    if (!st.alive(w) || saved(op.save, w)) continue;
    --out.shield_[w];
  }
  if (out.target_[op.u] == 1) {
    out.target_[op.u] = 0;
    out.shield_[op.u] = 0;
    --out.alive_count_;
  } else {
    --out.target_[op.u];
  }
  return out;
}

ReplayResult apply_sequence(const Graph& g, const Certificate& cert,
                            bool keep_trace) {
  State st(g, cert.shield, cert.target);
  ReplayResult res{st, std::nullopt, {}};
  for (size_t i = 0; i < cert.ops.size(); ++i) {
    try {
      auto chk = is_legal(st, cert.ops[i]);
      if (!chk.legal) {
        res.failure = ReplayFailure{
            static_cast<int>(i), chk.reason == LegalFail::budget
                                     ? "budget: shield+target of u does not exceed "
                                       "the saved total"
                                     : "an unsaved alive neighbor has shield 0"};
        break;
      }
      st = apply_shadesave(st, cert.ops[i]);
    } catch (const OpError& e) {
      res.failure = ReplayFailure{static_cast<int>(i), e.what()};
      break;
    }
    if (keep_trace) res.trace.push_back(st);
  }
  res.final = st;
  return res;
}

VerifyResult verify_certificate(const Graph& g, const Certificate& cert) {
  VerifyResult res;
  size_t n = static_cast<size_t>(g.vertex_count());
  if (cert.shield.size() != n || cert.target.size() != n) {
    res.reason = "shield/target length must match vertex count";
    res.fail_index = 0;
    return res;
  }
  for (size_t v = 0; v < n; ++v) {
    if (cert.shield[v] < 0 || cert.target[v] < 1) {
      res.reason = "initial shields must be >= 0 and targets >= 1";
      res.fail_index = 0;
      return res;
    }
  }
  if (cert.mode == Mode::type4) {
    for (size_t i = 0; i < cert.ops.size(); ++i)
      if (cert.ops[i].save.size() > 1) {
        res.fail_index = static_cast<int>(i);
        res.reason = "restricted mode allows at most one saved vertex per op";
        return res;
      }
  }
  auto rep = apply_sequence(g, cert);
  if (!rep.ok()) {
    res.fail_index = rep.failure->index;
    res.reason = rep.failure->reason;
    res.ops_applied = rep.failure->index;
    return res;
  }
  res.ops_applied = static_cast<long long>(cert.ops.size());
  if (rep.final.finished()) {
    res.verdict = Verdict::complete;
    // every op lowers the total remaining target by exactly one, so a
    // complete sequence has exactly sum(target) ops; anything else is a bug
    long long want = 0;
    for (size_t v = 0; v < n; ++v) want += cert.target[v];
    if (static_cast<long long>(cert.ops.size()) != want)
      throw std::logic_error("verify: complete sequence with wrong op count");
  } else {
    res.verdict = Verdict::legal_but_incomplete;
  }
  return res;
}

}  // namespace stdeg
