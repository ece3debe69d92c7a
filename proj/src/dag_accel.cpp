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

#include "pgdag/dag_accel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pgdag/fixpoint.hpp"
#include "pgdag/graph.hpp"

namespace pgdag {

namespace {

// Real nodes that reach each W node without passing another real node,
// by forward propagation in topological order.
std::vector<std::vector<Node>> compute_real_entries(const Arena& arena,
                                                    const NodeSet& w,
                                                    const std::vector<Node>& topo) {
  std::vector<std::vector<Node>> entries(arena.node_count());
  for (Node v : topo) {
    auto& e = entries[v];
    for (Node p : arena.predecessors(v)) {
      if (!w.test(p)) {
        e.push_back(p);
      } else {
        e.insert(e.end(), entries[p].begin(), entries[p].end());
      }
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
  }
  return entries;
}

}  // namespace

DagDecomposition dag_decomposition_from_set(const Arena& arena, const NodeSet& w) {
  const std::size_t n = arena.node_count();
  auto adj = arena.successor_lists();
  auto topo = topological_order(adj, w);
  if (!topo)
    throw std::invalid_argument("candidate DAG set contains an internal cycle");

  DagDecomposition dag;
  dag.dag_nodes = w;
  dag.real_nodes = w.complement();
  dag.topo_order = std::move(*topo);
  dag.real_entries = compute_real_entries(arena, w, dag.topo_order);
  dag.real_index.assign(n, -1);
  dag.real_nodes.for_each([&](Node v) {
    dag.real_index[v] = static_cast<std::int32_t>(dag.real_ids.size());
    dag.real_ids.push_back(v);
  });
  return dag;
}

bool is_positional_dag(const Arena& arena, const NodeSet& candidate) {
  auto adj = arena.successor_lists();
  auto topo = topological_order(adj, candidate);
  if (!topo) return false;
  auto entries = compute_real_entries(arena, candidate, *topo);
  bool ok = true;
  candidate.for_each([&](Node v) {
    if (arena.owner(v) == Player::Exists && entries[v].size() != 1) ok = false;
  });
  return ok;
}

DagDecomposition detect_positional_dag(const Arena& arena) {
  const std::size_t n = arena.node_count();
  auto adj = arena.successor_lists();

  // Nodes on no cycle at all: trivial SCCs without a self-loop.
  SccResult scc = strongly_connected_components(adj);
  std::vector<int> scc_size(scc.count, 0);
  for (Node v = 0; v < n; ++v) ++scc_size[scc.component[v]];
  NodeSet w(n);
  for (Node v = 0; v < n; ++v) {
    if (scc_size[scc.component[v]] != 1) continue;
    bool self_loop = false;
    for (Node s : arena.successors(v))
      if (s == v) self_loop = true;
    if (!self_loop) w.set(v);
  }

  int demoted = 0;
  for (;;) {
    auto topo = topological_order(adj, w);
    auto entries = compute_real_entries(arena, w, *topo);
    std::vector<Node> bad;
    w.for_each([&](Node v) {
      if (arena.owner(v) == Player::Exists && entries[v].size() != 1)
        bad.push_back(v);
    });
    if (bad.empty()) break;
    for (Node v : bad) w.reset(v);
    demoted += static_cast<int>(bad.size());
  }

  DagDecomposition dag = dag_decomposition_from_set(arena, w);
  dag.demoted = demoted;
  return dag;
}

DagDecomposition detect_positional_dag(const ParityGame& game) {
  return detect_positional_dag(game.arena);
}

namespace {

// Per-call evaluation of the (node, accumulated priority) dynamic
// program over the DAG. States carry the maximum priority seen up to
// and including the current node; an exit into a real node r is good
// when r lies in targets[q-1].
struct DagAttraction {
  const ParityGame& game;
  const DagDecomposition& dag;
  std::span<const NodeSet> targets;

  int levels;                       // number of target sets
  std::vector<std::int32_t> wpos;   // node -> position in topo order, -1 outside W
  std::vector<signed char> memo;    // (wpos * (levels+1) + q) -> -1 / 0 / 1
  std::vector<std::int64_t> choice; // successful successor for Exists states
  std::vector<bool> scanned;        // node expanded at least once (any q)
  std::uint64_t edges_touched = 0;

  DagAttraction(const ParityGame& g, const DagDecomposition& d,
                std::span<const NodeSet> t)
      : game(g), dag(d), targets(t), levels(static_cast<int>(t.size())) {
    wpos.assign(game.node_count(), -1);
    for (std::size_t i = 0; i < dag.topo_order.size(); ++i)
      wpos[dag.topo_order[i]] = static_cast<std::int32_t>(i);
    memo.assign(dag.topo_order.size() * (levels + 1), -1);
    choice.assign(dag.topo_order.size() * (levels + 1), -1);
    scanned.assign(dag.topo_order.size(), false);
  }

  std::size_t key(Node w, int q) const {
    return static_cast<std::size_t>(wpos[w]) * (levels + 1) + q;
  }

  // True when stepping from accumulated priority q into s keeps the
  // attraction claim alive. DAG successors defer to the memo, which
  // resolve() has filled by then.
  bool edge_good(Node s, int q) const {
    if (dag.real_nodes.test(s)) return targets[q - 1].test(s);
    return memo[key(s, std::max(q, game.priority[s]))] == 1;
  }

  bool resolve(Node w0, int q0) {
    if (memo[key(w0, q0)] != -1) return memo[key(w0, q0)] == 1;

    struct Frame {
      Node w;
      int q;
      std::size_t edge = 0;
    };
    std::vector<Frame> stack{{w0, q0}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      const std::size_t k = key(f.w, f.q);
      if (f.edge == 0 && !scanned[wpos[f.w]]) {
        scanned[wpos[f.w]] = true;
        edges_touched += game.arena.successors(f.w).size();
      }
      const bool exists = game.arena.owner(f.w) == Player::Exists;
      auto succ = game.arena.successors(f.w);
      bool settled = false;
      while (f.edge < succ.size()) {
        Node s = succ[f.edge];
        if (!dag.real_nodes.test(s)) {
          int q2 = std::max(f.q, game.priority[s]);
          if (memo[key(s, q2)] == -1) {
            stack.push_back({s, q2});
            settled = true;  // revisit this edge once the child is known
            break;
          }
        }
        bool good = edge_good(s, f.q);
        if (exists && good) {
          memo[k] = 1;
          choice[k] = s;
          stack.pop_back();
          settled = true;
          break;
        }
        if (!exists && !good) {
          memo[k] = 0;
          stack.pop_back();
          settled = true;
          break;
        }
        ++f.edge;
      }
      if (!settled) {
        memo[k] = exists ? 0 : 1;
        stack.pop_back();
      }
    }
    return memo[key(w0, q0)] == 1;
  }

  // Quantifies over the successors of a real source node. q0 is the
  // source's own priority; it opens every accumulation.
  bool source_attracted(Node v) {
    const int q0 = game.priority[v];
    auto succ = game.arena.successors(v);
    if (game.arena.owner(v) == Player::Exists) {
      for (Node s : succ) {
        if (!dag.real_nodes.test(s)) {
          ++edges_touched;
          resolve(s, std::max(q0, game.priority[s]));
        }
        if (edge_good(s, q0)) return true;
      }
      return false;
    }
    for (Node s : succ) {
      if (!dag.real_nodes.test(s)) {
        ++edges_touched;
        resolve(s, std::max(q0, game.priority[s]));
      }
      if (!edge_good(s, q0)) return false;
    }
    return true;
  }

  AttractionWitness build_witness(Node v) {
    AttractionWitness wit;
    wit.source = v;
    const int q0 = game.priority[v];

    std::vector<std::pair<Node, int>> todo;
    std::vector<bool> seen(memo.size(), false);

    auto step_into = [&](Node s, int q) {
      if (dag.real_nodes.test(s)) {
        wit.exits.emplace_back(s, q);
        return;
      }
      int q2 = std::max(q, game.priority[s]);
      if (!seen[key(s, q2)]) {
        seen[key(s, q2)] = true;
        todo.emplace_back(s, q2);
      }
    };

    if (game.arena.owner(v) == Player::Exists) {
      for (Node s : game.arena.successors(v)) {
        if (!dag.real_nodes.test(s))
          resolve(s, std::max(q0, game.priority[s]));
        if (edge_good(s, q0)) {
          wit.choice[{v, q0}] = s;
          step_into(s, q0);
          break;
        }
      }
    } else {
      for (Node s : game.arena.successors(v)) step_into(s, q0);
    }

    while (!todo.empty()) {
      auto [w, q] = todo.back();
      todo.pop_back();
      if (game.arena.owner(w) == Player::Exists) {
        Node s = static_cast<Node>(choice[key(w, q)]);
        wit.choice[{w, q}] = s;
        step_into(s, q);
      } else {
        for (Node s : game.arena.successors(w)) step_into(s, q);
      }
    }

    std::sort(wit.exits.begin(), wit.exits.end());
    wit.exits.erase(std::unique(wit.exits.begin(), wit.exits.end()),
                    wit.exits.end());
    return wit;
  }
};

void check_targets(const ParityGame& game, const DagDecomposition& dag,
                   std::span<const NodeSet> targets) {
  if (static_cast<int>(targets.size()) < game.max_priority())
    throw std::invalid_argument("dag_attractor: fewer target sets than priorities");
  for (const NodeSet& t : targets)
    if (!t.is_subset_of(dag.real_nodes))
      throw std::invalid_argument("dag_attractor: target set contains DAG nodes");
}

}  // namespace

DagAttractorResult dag_attractor(const ParityGame& game,
                                 const DagDecomposition& dag,
                                 std::span<const NodeSet> targets,
                                 bool with_witnesses) {
  check_targets(game, dag, targets);

  DagAttraction attraction(game, dag, targets);
  DagAttractorResult result;
  result.value = NodeSet(game.node_count());
  dag.real_nodes.for_each([&](Node v) {
    if (attraction.source_attracted(v)) result.value.set(v);
  });
  if (with_witnesses)
    result.value.for_each(
        [&](Node v) { result.witnesses.push_back(attraction.build_witness(v)); });
  result.edges_touched = attraction.edges_touched;
  return result;
}

bool verify_attraction_witness(const ParityGame& game, const DagDecomposition& dag,
                               std::span<const NodeSet> targets, Node source,
                               const AttractionWitness& witness) {
  if (witness.source != source) return false;
  if (static_cast<int>(targets.size()) < game.max_priority()) return false;

  // Exhaustive play enumeration over (node, accumulated priority)
  // states, entirely separate from the solver's memo tables.
  std::vector<std::pair<Node, int>> todo;
  std::set<std::pair<Node, int>> seen;
  bool ok = true;

  auto is_successor = [&](Node from, Node to) {
    auto succ = game.arena.successors(from);
    return std::find(succ.begin(), succ.end(), to) != succ.end();
  };

  // Stepping out of `from` (accumulated q): exits are checked against
  // their claimed target level, DAG continuations are enqueued.
  auto step = [&](Node from, int q, Node s) {
    (void)from;
    if (dag.real_nodes.test(s)) {
      if (!targets[q - 1].test(s)) ok = false;
      return;
    }
    auto state = std::make_pair(s, std::max(q, game.priority[s]));
    if (seen.insert(state).second) todo.push_back(state);
  };

  auto expand = [&](Node at, int q) {
    if (game.arena.owner(at) == Player::Exists) {
      auto it = witness.choice.find({at, q});
      if (it == witness.choice.end() || !is_successor(at, it->second)) {
        ok = false;
        return;
      }
      step(at, q, it->second);
    } else {
      for (Node s : game.arena.successors(at)) step(at, q, s);
    }
  };

  expand(source, game.priority[source]);
  while (ok && !todo.empty()) {
    auto [w, q] = todo.back();
    todo.pop_back();
    expand(w, q);
  }
  return ok;
}

AcceleratedResult solve_accelerated(const ParityGame& game,
                                    const DagDecomposition& dag,
                                    const AcceleratedOptions& options) {
  if (!is_normalized(game))
    throw std::invalid_argument("solve_accelerated requires a normalized game");

  const std::size_t n = game.node_count();
  const std::size_t m = dag.real_count();
  const int k = game.levels();
  const bool with_witnesses = static_cast<bool>(options.observer);

  SolveStats stats;
  NestedFixpointSpec spec;
  spec.domain_size = m;
  spec.depth = k;
  spec.step = [&](std::span<const NodeSet> args) {
    std::vector<NodeSet> targets(args.size(), NodeSet(n));
    for (std::size_t i = 0; i < args.size(); ++i)
      args[i].for_each([&](Node c) { targets[i].set(dag.real_ids[c]); });

    DagAttractorResult r = dag_attractor(game, dag, targets, with_witnesses);
    stats.attractor_cost += r.edges_touched;
    if (options.observer) options.observer(targets, r);

    NodeSet compact(m);
    r.value.for_each([&](Node v) { compact.set(dag.real_index[v]); });
    return compact;
  };

  FixpointResult fp = eval_nested_fixpoint(spec);
  stats.f_evaluations = fp.evaluations;

  AcceleratedResult out;
  out.win_exists_real = NodeSet(n);
  fp.value.for_each([&](Node c) { out.win_exists_real.set(dag.real_ids[c]); });
  out.stats = stats;
  return out;
}

WinnerMap extend_to_dag(const ParityGame& game, const DagDecomposition& dag,
                        const NodeSet& win_exists_real) {
  WinnerMap winners(game.node_count(), Player::Forall);
  win_exists_real.for_each([&](Node v) { winners[v] = Player::Exists; });

  // W-internal edges point forward in topo order, so a reverse sweep
  // sees every successor's winner before deciding a node.
  for (auto it = dag.topo_order.rbegin(); it != dag.topo_order.rend(); ++it) {
    Node w = *it;
    bool win;
    if (game.arena.owner(w) == Player::Exists) {
      win = false;
      for (Node s : game.arena.successors(w))
        if (winners[s] == Player::Exists) {
          win = true;
          break;
        }
    } else {
      win = true;
      for (Node s : game.arena.successors(w))
        if (winners[s] != Player::Exists) {
          win = false;
          break;
        }
    }
    winners[w] = win ? Player::Exists : Player::Forall;
  }
  return winners;
}

}  // namespace pgdag
