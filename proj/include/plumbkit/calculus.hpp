#pragma once

#include "plumbkit/arith.hpp"
#include "plumbkit/graph.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace plumbkit {

enum class MoveKind {
  BlowDown,          // +-1 vertex of valence 1 or 2
  CancelZeroPair,    // two-vertex component with a 0-weight end
  DeleteUnitVertex,  // isolated +-1 vertex
  BlowUp,            // inverse of BlowDown; only with a positive blow-up depth
};

const char* to_string(MoveKind kind);

struct WeightChange {
  VertexId id;
  std::optional<Integer> before;  // empty: vertex did not exist
  std::optional<Integer> after;   // empty: vertex was removed

  friend bool operator==(const WeightChange&, const WeightChange&) = default;
};

// One rewriting step together with the weights it read and wrote, so that a
// replay can confirm it is being applied to the same diagram.
struct Move {
  MoveKind kind;
  // BlowDown / DeleteUnitVertex: {v}. CancelZeroPair: {u, v}.
  // BlowUp: {new vertex, anchor...} with 0, 1 or 2 anchors.
  std::vector<VertexId> targets;
  int sign = 0;  // BlowUp only: weight of the new vertex
  std::vector<WeightChange> changes;

  friend bool operator==(const Move&, const Move&) = default;
};

PlumbingGraph blow_down(const PlumbingGraph& g, const VertexId& v);
PlumbingGraph cancel_zero_pair(const PlumbingGraph& g, const VertexId& u, const VertexId& v);
/// Adds vertex `fresh` of weight sign (+1 or -1). With one anchor it becomes a
/// leaf there; with two adjacent anchors it subdivides their edge. Anchor
/// weights increase by sign.
PlumbingGraph blow_up(const PlumbingGraph& g, const VertexId& fresh, int sign, const std::vector<VertexId>& anchors);

/// Builds the fully recorded move (throws MoveError if not applicable).
Move record_blow_down(const PlumbingGraph& g, const VertexId& v);
Move record_cancel_zero_pair(const PlumbingGraph& g, const VertexId& u, const VertexId& v);
Move record_blow_up(const PlumbingGraph& g, const VertexId& fresh, int sign, const std::vector<VertexId>& anchors);

/// Re-checks the recorded weights against g, applies the move, and checks the
/// result. Throws MoveError on any mismatch.
PlumbingGraph apply_move(const PlumbingGraph& g, const Move& m);

/// Every blow-down, deletion and cancellation applicable to g, in search order.
std::vector<Move> applicable_moves(const PlumbingGraph& g, bool include_blow_ups = false);

struct CanonicalForm {
  std::string code;
  // Position of each vertex in the canonical traversal.
  std::map<VertexId, std::size_t> position;
};

/// Isomorphism-invariant code for a weighted forest: every tree is encoded
/// from its center(s) with sorted subtrees, trees are sorted.
CanonicalForm canonicalize(const PlumbingGraph& g);
std::string canonical_form(const PlumbingGraph& g);

struct MoveTrace {
  PlumbingGraph start;
  std::vector<Move> moves;
  PlumbingGraph end;

  /// Graphs after 0, 1, ..., n moves.
  std::vector<PlumbingGraph> intermediates() const;
};

/// Replays trace.moves from trace.start; throws MoveError if a step does not
/// apply or the result differs from trace.end.
PlumbingGraph replay(const MoveTrace& trace);

/// Text form: the start graph as a graph document, a "moves" line, then one
/// move per line (`blowdown <id>`, `cancel <id> <id>`,
/// `blowup <new-id> <sign> [<id> [<id>]]`).
std::string serialize_trace(const MoveTrace& trace);
/// Parses and replays. Throws ParseError or MoveError.
MoveTrace parse_trace(const std::string& text);

enum class VerdictKind { S3, NotHomologySphere, Unknown };

const char* to_string(VerdictKind kind);

struct ReduceOptions {
  std::size_t budget = 100000;  // visited canonical states
  std::size_t blow_up_depth = 0;
};

struct Reduction {
  VerdictKind verdict = VerdictKind::Unknown;
  Integer det_abs;
  bool budget_exhausted = false;
  std::size_t states_visited = 0;
  std::optional<MoveTrace> trace;  // present iff verdict == S3

  /// "S3", "NOT-HS(<detAbs>)" or "UNKNOWN".
  std::string label() const;
};

/// Breadth-first search over moves with canonical-form memoization.
Reduction reduce_to_s3(const PlumbingGraph& g, const ReduceOptions& options = {});

}  // namespace plumbkit
