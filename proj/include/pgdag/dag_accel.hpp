/*
 * Copyright 2026 The pgdag authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "pgdag/parity_solvers.hpp"

namespace pgdag {

/// A cycle-free node set W and everything derived from it. Nodes outside
/// W are "real"; they form the restricted fixpoint domain. Real nodes
/// additionally carry a dense compact index so set iteration over the
/// restricted domain stays cheap.
struct DagDecomposition {
  NodeSet dag_nodes;   // W
  NodeSet real_nodes;  // V \ W

  /// W in canonical topological order of the W-internal edges.
  std::vector<Node> topo_order;

  /// Per node in W: the real nodes that reach it without passing
  /// another real node (sorted). Empty vectors for real nodes.
  std::vector<std::vector<Node>> real_entries;

  std::vector<Node> real_ids;          // compact index -> node id
  std::vector<std::int32_t> real_index;  // node id -> compact index, -1 in W

  /// Existential DAG nodes demoted to keep entry uniqueness.
  int demoted = 0;

  std::size_t real_count() const { return real_ids.size(); }
  bool empty() const { return topo_order.empty(); }
};

/// Builds the decomposition for a given candidate W without demoting
/// anything. Throws std::invalid_argument when W contains an internal
/// cycle. The entry-uniqueness condition is not enforced here.
DagDecomposition dag_decomposition_from_set(const Arena& arena, const NodeSet& w);

/// True iff `candidate` induces an acyclic subgraph and every
/// existential member has exactly one real entry node.
bool is_positional_dag(const Arena& arena, const NodeSet& candidate);

/// Detection heuristic: take all nodes in trivial strongly connected
/// components without self-loops, then repeatedly demote existential
/// members whose real-entry count differs from one until stable. The
/// result always satisfies both decomposition invariants; W may be
/// empty.
DagDecomposition detect_positional_dag(const Arena& arena);
DagDecomposition detect_positional_dag(const ParityGame& game);

/// Certificate that Exists attracts from `source` through the DAG: a
/// choice of successor per (node, accumulated priority) state plus the
/// set of (exit, accumulated priority) pairs reachable under it. The
/// choice map includes the source's own move when the source is
/// existential. Keys carry the accumulated priority because the best
/// move inside the DAG may depend on the maximum seen so far.
struct AttractionWitness {
  Node source = 0;
  std::map<std::pair<Node, int>, Node> choice;
  std::vector<std::pair<Node, int>> exits;
};

struct DagAttractorResult {
  /// Attracted real nodes, as a subset of the full node domain.
  NodeSet value;
  /// One witness per attracted node, in ascending source order; only
  /// filled on request.
  std::vector<AttractionWitness> witnesses;
  /// DAG edges explored during this call, counting each node's edge
  /// list once. Bounded by the number of edges incident to W.
  std::uint64_t edges_touched = 0;
};

/// Multi-step attraction through the DAG. `targets[p-1]` holds the set
/// V_p of real nodes claimed for accumulated priority p; targets.size()
/// must be at least the maximum priority. A real node is attracted when
/// Exists can force that the first real node reached after at least one
/// move (re-entering the source counts) lies in V_p, where p is the
/// maximum priority over the source and all strictly intermediate DAG
/// nodes, the exit excluded. With W empty this degenerates to the
/// one-step parity_step body.
///
/// Throws std::invalid_argument when some target set contains DAG nodes.
DagAttractorResult dag_attractor(const ParityGame& game,
                                 const DagDecomposition& dag,
                                 std::span<const NodeSet> targets,
                                 bool with_witnesses = false);

/// Replays the witness by exhaustive enumeration over (node, priority)
/// states: Exists follows witness.choice, Forall takes every edge, and
/// every exit must land in its claimed target set. Independent of the
/// memoized computation in dag_attractor.
bool verify_attraction_witness(const ParityGame& game, const DagDecomposition& dag,
                               std::span<const NodeSet> targets, Node source,
                               const AttractionWitness& witness);

struct AcceleratedResult {
  /// Exists winning region restricted to the real nodes (full domain
  /// ids, subset of dag.real_nodes).
  NodeSet win_exists_real;
  SolveStats stats;
};

struct AcceleratedOptions {
  /// Called once per attractor evaluation with the full-domain target
  /// sets and the result (witnesses included). Enables external
  /// auditing; leave empty to skip witness construction.
  std::function<void(std::span<const NodeSet>, const DagAttractorResult&)> observer;
};

/// Solves the game over the restricted domain: the nested fixpoint of
/// dag_attractor over the real nodes only. stats.f_evaluations counts
/// attractor calls, stats.attractor_cost accumulates DAG edges
/// explored. Winners of DAG nodes follow via extend_to_dag.
AcceleratedResult solve_accelerated(const ParityGame& game,
                                    const DagDecomposition& dag,
                                    const AcceleratedOptions& options = {});

/// Completes a real-node winner set to all nodes by backward induction
/// over the DAG: a DAG node is won by Exists iff Exists forces reaching
/// the winning real region through W.
WinnerMap extend_to_dag(const ParityGame& game, const DagDecomposition& dag,
                        const NodeSet& win_exists_real);

}  // namespace pgdag
