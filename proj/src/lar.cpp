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

#include "pgdag/lar.hpp"

#include <algorithm>
#include <bit>

#include "pgdag/graph.hpp"

namespace pgdag {

Permutation Permutation::identity(int size) {
  std::vector<std::uint8_t> order(size);
  for (int i = 0; i < size; ++i) order[i] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(order));
}

int Permutation::position_of(int color) const {
  for (int i = 0; i < size(); ++i)
    if (order_[i] == color) return i + 1;
  return 0;
}

Permutation Permutation::move_to_front(ColorSet d) const {
  int pos = -1;  // 0-based index of the right-most selected color
  for (int i = size() - 1; i >= 0; --i)
    if ((d >> order_[i]) & 1) {
      pos = i;
      break;
    }
  if (pos < 0) return *this;
  std::vector<std::uint8_t> order = order_;
  std::uint8_t c = order[pos];
  order.erase(order.begin() + pos);
  order.insert(order.begin(), c);
  return Permutation(std::move(order));
}

ColorSet Permutation::prefix(int p) const {
  ColorSet out = 0;
  for (int i = 0; i < p; ++i) out |= ColorSet{1} << order_[i];
  return out;
}

std::size_t Permutation::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::uint8_t c : order_) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

int lar_priority(const EmersonLeiGame& game, Node v, const Permutation& perm) {
  const ColorSet colors = game.coloring[v];
  int p = 0;
  for (int i = perm.size(); i >= 1; --i)
    if ((colors >> perm.at(i)) & 1) {
      p = i;
      break;
    }
  return game.objective.evaluate(perm.prefix(p)) ? 2 * p : 2 * p + 1;
}

namespace {

struct PermTable {
  std::vector<Permutation> perms;
  std::unordered_map<std::size_t, std::vector<int>> by_hash;

  int intern(const Permutation& p) {
    auto& bucket = by_hash[p.hash()];
    for (int idx : bucket)
      if (perms[idx] == p) return idx;
    perms.push_back(p);
    bucket.push_back(static_cast<int>(perms.size()) - 1);
    return static_cast<int>(perms.size()) - 1;
  }
};

}  // namespace

ProductGame build_product(const EmersonLeiGame& game,
                          const std::vector<Node>& initials, std::size_t budget) {
  const std::size_t n = game.node_count();
  ProductGame product;
  product.initial_perm = Permutation::identity(static_cast<int>(game.colors.size()));
  product.initial_product.assign(n, -1);

  PermTable table;
  const int pi0 = table.intern(product.initial_perm);

  // (orig << 32 | perm index) -> product id
  std::unordered_map<std::uint64_t, Node> ids;
  auto intern_state = [&](Node v, int perm) -> std::pair<Node, bool> {
    std::uint64_t key = (static_cast<std::uint64_t>(v) << 32) |
                        static_cast<std::uint32_t>(perm);
    auto it = ids.find(key);
    if (it != ids.end()) return {it->second, false};
    if (product.orig_node.size() >= budget)
      throw BudgetError("record product exceeds node budget (" +
                        std::to_string(budget) + " nodes)");
    Node id = static_cast<Node>(product.orig_node.size());
    ids.emplace(key, id);
    product.orig_node.push_back(v);
    product.perm_id.push_back(perm);
    return {id, true};
  };

  std::vector<Node> queue;
  std::vector<Node> sorted_initials = initials;
  std::sort(sorted_initials.begin(), sorted_initials.end());
  sorted_initials.erase(std::unique(sorted_initials.begin(), sorted_initials.end()),
                        sorted_initials.end());
  for (Node v : sorted_initials) {
    auto [id, fresh] = intern_state(v, pi0);
    product.initial_product[v] = id;
    if (fresh) queue.push_back(id);
  }

  std::vector<std::vector<Node>> succ;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Node id = queue[qi];
    Node v = product.orig_node[id];
    int perm = product.perm_id[id];
    const int next_perm =
        table.intern(table.perms[perm].move_to_front(game.coloring[v]));

    if (succ.size() <= id) succ.resize(id + 1);
    for (Node w : game.arena.successors(v)) {
      auto [wid, fresh] = intern_state(w, next_perm);
      succ[id].push_back(wid);
      if (fresh) queue.push_back(wid);
    }
  }
  succ.resize(product.orig_node.size());

  product.perms = std::move(table.perms);

  std::vector<Player> owners(product.node_count());
  product.raw_priority.resize(product.node_count());
  for (Node id = 0; id < product.node_count(); ++id) {
    Node v = product.orig_node[id];
    owners[id] = game.arena.owner(v);
    product.raw_priority[id] =
        lar_priority(game, v, product.perms[product.perm_id[id]]);
  }

  ParityGame raw{Arena(std::move(owners), succ), product.raw_priority};
  product.parity = normalize_priorities(raw);
  return product;
}

MemoryStrategy::MemoryStrategy(std::vector<Permutation> memory, int initial,
                               std::vector<ColorSet> coloring,
                               std::map<std::pair<Node, int>, Node> moves)
    : memory_(std::move(memory)),
      initial_(initial),
      coloring_(std::move(coloring)),
      moves_(std::move(moves)) {
  for (int i = 0; i < static_cast<int>(memory_.size()); ++i)
    index_[memory_[i].hash()].push_back(i);
}

int MemoryStrategy::find(const Permutation& p) const {
  auto it = index_.find(p.hash());
  if (it == index_.end()) return -1;
  for (int idx : it->second)
    if (memory_[idx] == p) return idx;
  return -1;
}

int MemoryStrategy::update(int memory, Node from) const {
  return find(memory_[memory].move_to_front(coloring_[from]));
}

std::optional<Node> MemoryStrategy::move(Node v, int memory) const {
  auto it = moves_.find({v, memory});
  if (it == moves_.end()) return std::nullopt;
  return it->second;
}

ElSolveResult solve_el(const EmersonLeiGame& game, std::size_t budget) {
  auto issues = validate_el_game(game);
  if (!issues.empty()) throw ValidationError(issues);

  std::vector<Node> all(game.node_count());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<Node>(v);
  ProductGame product = build_product(game, all, budget);

  ZielonkaResult z = solve_zielonka(product.parity);

  ElSolveResult result;
  result.product_nodes = product.node_count();
  result.winners.resize(game.node_count());
  for (std::size_t v = 0; v < game.node_count(); ++v)
    result.winners[v] = z.winners[product.initial_product[v]];

  // Lift the positional product strategy: the permutation component is
  // exactly the memory value.
  std::map<std::pair<Node, int>, Node> moves;
  for (Node id = 0; id < product.node_count(); ++id) {
    if (!z.strategy_exists.defined(id)) continue;
    Node target = z.strategy_exists.move(id);
    moves[{product.orig_node[id], product.perm_id[id]}] = product.orig_node[target];
  }
  int pi0 = -1;
  for (int i = 0; i < static_cast<int>(product.perms.size()); ++i)
    if (product.perms[i] == product.initial_perm) pi0 = i;
  result.strategy =
      MemoryStrategy(product.perms, pi0, game.coloring, std::move(moves));
  return result;
}

bool recurrent_color_sets_satisfy(const std::vector<std::vector<Node>>& adj,
                                  const NodeSet& reachable,
                                  const std::vector<ColorSet>& node_colors,
                                  const ObjectiveFormula& objective) {
  ColorSet relevant = 0;
  reachable.for_each([&](Node v) { relevant |= node_colors[v]; });
  if (std::popcount(relevant) > 20)
    throw BudgetError("recurrence check limited to 20 distinct colors");

  // A recurring color set D is realizable iff the subgraph of nodes
  // colored within D has a reachable strongly connected component that
  // contains a cycle and covers all of D. Walk every candidate D that
  // violates the objective and look for such a component.
  ColorSet d = relevant;
  for (;;) {
    if (!objective.evaluate(d)) {
      NodeSet mask(adj.size());
      reachable.for_each([&](Node v) {
        if ((node_colors[v] & ~d) == 0) mask.set(v);
      });
      if (!mask.empty()) {
        SccResult scc = strongly_connected_components(adj, &mask);
        std::vector<ColorSet> comp_colors(scc.count, 0);
        std::vector<int> comp_size(scc.count, 0);
        std::vector<bool> comp_loop(scc.count, false);
        mask.for_each([&](Node v) {
          int c = scc.component[v];
          comp_colors[c] |= node_colors[v];
          ++comp_size[c];
          for (Node w : adj[v])
            if (w == v) comp_loop[c] = true;
        });
        for (int c = 0; c < scc.count; ++c) {
          bool has_edge = comp_size[c] >= 2 || comp_loop[c];
          if (has_edge && (d & ~comp_colors[c]) == 0) return false;
        }
      }
    }
    if (d == 0) break;
    d = (d - 1) & relevant;
  }
  return true;
}

Player el_oracle(const EmersonLeiGame& game, Node v, std::size_t node_budget,
                 std::uint64_t strategy_budget) {
  ProductGame product = build_product(game, {v}, node_budget);
  const std::size_t pn = product.node_count();
  const Node start = static_cast<Node>(product.initial_product[v]);

  std::vector<ColorSet> colors(pn);
  for (Node id = 0; id < pn; ++id) colors[id] = game.coloring[product.orig_node[id]];

  auto full_adj = product.parity.arena.successor_lists();

  std::vector<Node> exist_nodes;
  std::uint64_t combinations = 1;
  for (Node id = 0; id < pn; ++id)
    if (product.parity.arena.owner(id) == Player::Exists) {
      exist_nodes.push_back(id);
      if (combinations > strategy_budget / std::max<std::size_t>(full_adj[id].size(), 1))
        throw BudgetError("positional strategy enumeration exceeds budget");
      combinations *= full_adj[id].size();
    }
  if (combinations > strategy_budget)
    throw BudgetError("positional strategy enumeration exceeds budget");

  std::vector<std::size_t> pick(exist_nodes.size(), 0);
  for (;;) {
    // Restrict existential nodes to the picked move.
    std::vector<std::vector<Node>> adj(pn);
    for (Node id = 0; id < pn; ++id) adj[id] = full_adj[id];
    for (std::size_t i = 0; i < exist_nodes.size(); ++i)
      adj[exist_nodes[i]] = {full_adj[exist_nodes[i]][pick[i]]};

    NodeSet reach = reachable_from(adj, {start});
    if (recurrent_color_sets_satisfy(adj, reach, colors, game.objective))
      return Player::Exists;

    // Odometer over the move choices.
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < full_adj[exist_nodes[i]].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return Player::Forall;
}

bool verify_el_strategy(const EmersonLeiGame& game, const MemoryStrategy& strategy,
                        const NodeSet& region) {
  // Discover the strategy-restricted product reachable from the region.
  std::unordered_map<std::uint64_t, Node> ids;
  std::vector<Node> orig;
  std::vector<int> mem;
  std::vector<std::vector<Node>> adj;

  auto intern = [&](Node v, int m) -> std::pair<Node, bool> {
    std::uint64_t key =
        (static_cast<std::uint64_t>(v) << 32) | static_cast<std::uint32_t>(m);
    auto it = ids.find(key);
    if (it != ids.end()) return {it->second, false};
    Node id = static_cast<Node>(orig.size());
    ids.emplace(key, id);
    orig.push_back(v);
    mem.push_back(m);
    adj.emplace_back();
    return {id, true};
  };

  std::vector<Node> queue;
  region.for_each([&](Node v) {
    auto [id, fresh] = intern(v, strategy.initial_memory());
    if (fresh) queue.push_back(id);
  });

  bool complete = true;
  for (std::size_t qi = 0; qi < queue.size() && complete; ++qi) {
    Node id = queue[qi];
    Node v = orig[id];
    int m = mem[id];
    int m2 = strategy.update(m, v);
    if (m2 < 0) {
      complete = false;  // reachable permutation missing from the memory
      break;
    }
    if (game.arena.owner(v) == Player::Exists) {
      auto target = strategy.move(v, m);
      if (!target) {
        complete = false;
        break;
      }
      auto succ = game.arena.successors(v);
      if (std::find(succ.begin(), succ.end(), *target) == succ.end()) {
        complete = false;
        break;
      }
      auto [wid, fresh] = intern(*target, m2);
      adj[id].push_back(wid);
      if (fresh) queue.push_back(wid);
    } else {
      for (Node w : game.arena.successors(v)) {
        auto [wid, fresh] = intern(w, m2);
        adj[id].push_back(wid);
        if (fresh) queue.push_back(wid);
      }
    }
  }
  if (!complete) return false;

  std::vector<ColorSet> colors(orig.size());
  for (std::size_t i = 0; i < orig.size(); ++i) colors[i] = game.coloring[orig[i]];
  NodeSet all(orig.size());
  for (Node i = 0; i < orig.size(); ++i) all.set(i);
  return recurrent_color_sets_satisfy(adj, all, colors, game.objective);
}

bool check_dag_preservation(const EmersonLeiGame& game, const DagDecomposition& dag,
                            const ProductGame& product) {
  (void)game;
  NodeSet candidate(product.node_count());
  for (Node id = 0; id < product.node_count(); ++id)
    if (dag.dag_nodes.test(product.orig_node[id])) candidate.set(id);
  return is_positional_dag(product.parity.arena, candidate);
}

}  // namespace pgdag
