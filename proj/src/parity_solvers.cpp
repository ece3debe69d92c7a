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

#include "pgdag/parity_solvers.hpp"

#include <algorithm>
#include <stdexcept>

#include "pgdag/fixpoint.hpp"
#include "pgdag/graph.hpp"

namespace pgdag {

NodeSet cpre(const ParityGame& game, const NodeSet& target) {
  const std::size_t n = game.node_count();
  NodeSet out(n);
  for (Node v = 0; v < n; ++v) {
    auto succ = game.arena.successors(v);
    if (game.arena.owner(v) == Player::Exists) {
      for (Node w : succ)
        if (target.test(w)) {
          out.set(v);
          break;
        }
    } else {
      bool all = !succ.empty();
      for (Node w : succ)
        if (!target.test(w)) {
          all = false;
          break;
        }
      if (all) out.set(v);
    }
  }
  return out;
}

namespace {

NodeSet parity_step_impl(const ParityGame& game,
                         const std::vector<NodeSet>& classes,
                         std::span<const NodeSet> levels, SolveStats* stats) {
  NodeSet out(game.node_count());
  for (std::size_t i = 1; i <= levels.size(); ++i) {
    if (i < classes.size() && !classes[i].empty()) {
      if (stats) ++stats->cpre_evaluations;
      out |= classes[i] & cpre(game, levels[i - 1]);
    }
  }
  return out;
}

}  // namespace

NodeSet parity_step(const ParityGame& game, std::span<const NodeSet> levels) {
  if (static_cast<int>(levels.size()) < game.max_priority())
    throw std::invalid_argument("parity_step: fewer argument sets than priorities");
  return parity_step_impl(game, game.priority_classes(game.max_priority()),
                          levels, nullptr);
}

std::pair<WinnerMap, SolveStats> solve_baseline(const ParityGame& game) {
  if (!is_normalized(game))
    throw std::invalid_argument("solve_baseline requires a normalized game");
  const int k = game.levels();
  const auto classes = game.priority_classes(k);

  SolveStats stats;
  NestedFixpointSpec spec;
  spec.domain_size = game.node_count();
  spec.depth = k;
  spec.step = [&](std::span<const NodeSet> args) {
    return parity_step_impl(game, classes, args, &stats);
  };

  FixpointResult fp = eval_nested_fixpoint(spec);
  stats.f_evaluations = fp.evaluations;

  WinnerMap winners(game.node_count(), Player::Forall);
  fp.value.for_each([&](Node v) { winners[v] = Player::Exists; });
  return {std::move(winners), stats};
}

namespace {

// Recursive attractor decomposition. Subgames are node masks in which
// every node keeps at least one successor (maintained by construction).
struct ZielonkaSolver {
  const ParityGame& game;
  WinnerMap winner;
  std::vector<std::int64_t> strat_exists;
  std::vector<std::int64_t> strat_forall;

  explicit ZielonkaSolver(const ParityGame& g)
      : game(g),
        winner(g.node_count(), Player::Forall),
        strat_exists(g.node_count(), -1),
        strat_forall(g.node_count(), -1) {}

  std::vector<std::int64_t>& strategy_of(Player p) {
    return p == Player::Exists ? strat_exists : strat_forall;
  }

  // Attractor of `target` within `sub` for `player`. Newly attracted
  // player nodes get the first successor already inside the attractor;
  // target nodes are left untouched.
  NodeSet attract(const NodeSet& sub, const NodeSet& target, Player player) {
    auto& strat = strategy_of(player);
    NodeSet attr = target;
    std::vector<Node> queue = target.to_vector();

    // Outgoing-edge counts within sub for opponent nodes.
    std::vector<int> pending(game.node_count(), 0);
    sub.for_each([&](Node v) {
      if (game.arena.owner(v) != player) {
        int c = 0;
        for (Node w : game.arena.successors(v))
          if (sub.test(w)) ++c;
        pending[v] = c;
      }
    });

    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Node u = queue[qi];
      for (Node p : game.arena.predecessors(u)) {
        if (!sub.test(p) || attr.test(p)) continue;
        if (game.arena.owner(p) == player) {
          // Pick the move before adding p itself: a self-loop must not
          // masquerade as the attracting edge.
          for (Node w : game.arena.successors(p))
            if (attr.test(w)) {
              strat[p] = w;
              break;
            }
          attr.set(p);
          queue.push_back(p);
        } else if (--pending[p] == 0) {
          attr.set(p);
          queue.push_back(p);
        }
      }
    }
    return attr;
  }

  void solve(const NodeSet& sub) {
    if (sub.empty()) return;

    int top = -1;
    sub.for_each([&](Node v) { top = std::max(top, game.priority[v]); });
    const Player player = (top % 2 == 0) ? Player::Exists : Player::Forall;

    NodeSet pivot(game.node_count());
    sub.for_each([&](Node v) {
      if (game.priority[v] == top) pivot.set(v);
    });

    NodeSet head = attract(sub, pivot, player);
    NodeSet rest = sub - head;
    solve(rest);

    NodeSet opp_region(game.node_count());
    rest.for_each([&](Node v) {
      if (winner[v] == opponent(player)) opp_region.set(v);
    });

    if (opp_region.empty()) {
      head.for_each([&](Node v) { winner[v] = player; });
      // On the pivot itself any continuation inside the subgame works:
      // nothing in sub exceeds its priority.
      auto& strat = strategy_of(player);
      pivot.for_each([&](Node v) {
        if (game.arena.owner(v) == player)
          for (Node w : game.arena.successors(v))
            if (sub.test(w)) {
              strat[v] = w;
              break;
            }
      });
    } else {
      NodeSet trap = attract(sub, opp_region, opponent(player));
      solve(sub - trap);
      trap.for_each([&](Node v) { winner[v] = opponent(player); });
    }
  }
};

}  // namespace

ZielonkaResult solve_zielonka(const ParityGame& game) {
  ZielonkaSolver solver(game);
  solver.solve(NodeSet::full(game.node_count()));

  ZielonkaResult res;
  res.winners = std::move(solver.winner);
  res.strategy_exists = {Player::Exists, std::move(solver.strat_exists)};
  res.strategy_forall = {Player::Forall, std::move(solver.strat_forall)};

  // Re-solved subgames can leave stale moves behind on nodes that ended
  // up in the other region; the strategy domain is the winning region.
  for (Node v = 0; v < game.node_count(); ++v) {
    if (res.winners[v] != Player::Exists) res.strategy_exists.moves[v] = -1;
    if (res.winners[v] != Player::Forall) res.strategy_forall.moves[v] = -1;
  }
  return res;
}

bool verify_strategy(const ParityGame& game, const NodeSet& region,
                     const PositionalStrategy& strategy, Player player) {
  const std::size_t n = game.node_count();

  // Restricted graph: player follows the strategy, opponent keeps all
  // moves. Escaping the region via an opponent edge refutes the claim;
  // escaping via the strategy itself means the strategy is unsound.
  std::vector<std::vector<Node>> adj(n);
  bool escapes = false;
  for (Node v = 0; v < n; ++v) {
    if (!region.test(v)) continue;
    if (game.arena.owner(v) == player) {
      if (!strategy.defined(v))
        throw std::invalid_argument("verify_strategy: strategy undefined on node " +
                                    std::to_string(v));
      Node w = strategy.move(v);
      auto succ = game.arena.successors(v);
      if (std::find(succ.begin(), succ.end(), w) == succ.end())
        throw std::runtime_error("verify_strategy: move from node " +
                                 std::to_string(v) + " is not a successor");
      if (!region.test(w))
        throw std::runtime_error("verify_strategy: strategy leaves the region at node " +
                                 std::to_string(v));
      adj[v].push_back(w);
    } else {
      for (Node w : game.arena.successors(v)) {
        if (!region.test(w)) escapes = true;
        adj[v].push_back(w);
      }
    }
  }
  if (escapes) return false;

  // Every cycle must have its maximum priority of the player's parity.
  // For each opposing priority p, a cycle with maximum exactly p exists
  // iff the subgraph of priorities <= p has an SCC with a cycle through
  // a priority-p node.
  int max_prio = 0;
  region.for_each([&](Node v) { max_prio = std::max(max_prio, game.priority[v]); });
  const int bad_parity = (player == Player::Exists) ? 1 : 0;

  for (int p = bad_parity; p <= max_prio; p += 2) {
    NodeSet mask(n);
    bool has_pivot = false;
    region.for_each([&](Node v) {
      if (game.priority[v] <= p) {
        mask.set(v);
        if (game.priority[v] == p) has_pivot = true;
      }
    });
    if (!has_pivot) continue;

    SccResult scc = strongly_connected_components(adj, &mask);
    auto comps = scc.members();
    for (const auto& comp : comps) {
      bool pivot_in = false;
      for (Node v : comp)
        if (game.priority[v] == p) pivot_in = true;
      if (!pivot_in) continue;
      if (comp.size() >= 2) return false;
      Node v = comp.front();
      for (Node w : adj[v])
        if (w == v) return false;  // self-loop of bad parity
    }
  }
  return true;
}

}  // namespace pgdag
