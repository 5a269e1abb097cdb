#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stdeg/graph.hpp"

namespace stdeg {

// type3: an op may save any subset of the shaded vertex's neighbors.
// type4: at most one neighbor may be saved per op.
enum class Mode { type3, type4 };

// One shading operation: shade u, protecting the vertices in save.
// save is kept sorted; duplicates are rejected wherever ops are built
// or parsed (they indicate a generator bug, not a malformed save set).
struct Op {
  VertexId u = 0;
  std::vector<VertexId> save;
  bool operator==(const Op&) const = default;
};

struct Certificate {
  Mode mode = Mode::type4;
  std::vector<int> shield;  // initial shield S(v), one per vertex
  std::vector<int> target;  // initial target T(v) >= 1, one per vertex
  std::vector<Op> ops;
  bool operator==(const Certificate&) const = default;
};

// Structural problems with an op (as opposed to an op that is merely not
// legal in the current state): these indicate caller bugs and throw.
struct OpError : std::runtime_error {
  enum class Kind { dead_vertex, not_neighbor, duplicate_save, bad_vertex };
  Kind kind;
  OpError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// A position of the shading game: which vertices are still alive, and the
// current shields / remaining targets. Dead vertices report target 0 and
// shield 0. The graph is shared, never copied.
class State {
 public:
  State(const Graph& g, std::vector<int> shield, std::vector<int> target);

  const Graph& graph() const { return *g_; }
  bool alive(VertexId v) const { return target_[v] > 0; }
  int shield(VertexId v) const { return shield_[v]; }
  int target(VertexId v) const { return target_[v]; }
  int alive_count() const { return alive_count_; }
  bool finished() const { return alive_count_ == 0; }
  long long total_target() const;
  std::vector<VertexId> alive_vertices() const;
  const std::vector<int>& shields() const { return shield_; }
  const std::vector<int>& targets() const { return target_; }

  // Canonical identity of the position: alive set plus (shield, target)
  // restricted to alive vertices, in id order, packed into a byte string.
  std::string canonical_key() const;

  bool operator==(const State&) const;

 private:
  friend State apply_shadesave(const State&, const Op&);
  const Graph* g_;
  std::vector<int> shield_, target_;
  int alive_count_;
};

enum class LegalFail { none, budget, shield_underflow };

struct LegalCheck {
  bool legal = false;
  LegalFail reason = LegalFail::none;
};

// Checks the two legality conditions for shading op.u with save set op.save:
//   S(u) + T(u) > sum over saved w of (S(w) + T(w)),  and
//   every alive unsaved neighbor of u has shield >= 1.
// Structural violations (dead u, save not an alive neighbor, duplicate
// entries) throw OpError instead of returning "not legal".
LegalCheck is_legal(const State& st, const Op& op);

// Applies a legal op and returns the successor state. Throws OpError on
// structural problems and std::logic_error if the op is not legal.
State apply_shadesave(const State& st, const Op& op);

struct ReplayFailure {
  int index = -1;       // op index where the replay stopped
  std::string reason;   // human-readable cause
};

struct ReplayResult {
  State final;
  std::optional<ReplayFailure> failure;   // empty iff every op applied legally
  std::vector<State> trace;               // states after each op, if requested
  bool ok() const { return !failure.has_value(); }
};

// Replays cert.ops from (cert.shield, cert.target), stopping at the first
// op that is structurally invalid or not legal. Mode restrictions are the
// verifier's business; apply_sequence only enforces legality.
ReplayResult apply_sequence(const Graph& g, const Certificate& cert,
                            bool keep_trace = false);

enum class Verdict { complete, legal_but_incomplete, illegal_at };

struct VerifyResult {
  Verdict verdict = Verdict::illegal_at;
  int fail_index = -1;      // meaningful for illegal_at
  std::string reason;       // meaningful for illegal_at
  long long ops_applied = 0;
  bool ok() const { return verdict == Verdict::complete; }
};

// Full certificate check: dimensions, targets >= 1, shields >= 0, per-op
// structural validity and legality, the mode's save-set restriction, and
// (for complete) an empty final graph. All failures are verdicts, not
// exceptions. A complete certificate always has exactly sum(target) ops.
VerifyResult verify_certificate(const Graph& g, const Certificate& cert);

}  // namespace stdeg
