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
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pgdag/dag_accel.hpp"
#include "pgdag/el_game.hpp"
#include "pgdag/errors.hpp"
#include "pgdag/parity_solvers.hpp"

namespace pgdag {

/// Permutation of the color indices 0..size-1. Positions are 1-based to
/// match the usual recency-record reading: position 1 is the front
/// (most recently moved), position size the back.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int size);
  explicit Permutation(std::vector<std::uint8_t> order) : order_(std::move(order)) {}

  int size() const { return static_cast<int>(order_.size()); }
  int at(int position) const { return order_[position - 1]; }
  int position_of(int color) const;

  /// Moves the color of `d` sitting at the right-most position to the
  /// front; identity when d selects nothing.
  Permutation move_to_front(ColorSet d) const;

  /// Colors occupying the first `p` positions.
  ColorSet prefix(int p) const;

  bool operator==(const Permutation&) const = default;
  std::size_t hash() const;

 private:
  std::vector<std::uint8_t> order_;
};

inline Permutation perm_at(const Permutation& perm, ColorSet d) {
  return perm.move_to_front(d);
}

/// Priority of the record state (v, perm): p is the right-most position
/// of perm holding a color of v (0 for colorless nodes), doubled when
/// the first p positions satisfy the objective and doubled-plus-one
/// otherwise. Values lie in 0..2|C|+1.
int lar_priority(const EmersonLeiGame& game, Node v, const Permutation& perm);

/// Reachable part of the record product: nodes are (original node,
/// permutation) pairs, edges update the permutation by the source's
/// colors, priorities come from lar_priority and are normalized.
struct ProductGame {
  ParityGame parity;              // normalized
  std::vector<int> raw_priority;  // pre-normalization record priorities

  std::vector<Node> orig_node;  // product id -> original node
  std::vector<int> perm_id;     // product id -> index into perms
  std::vector<Permutation> perms;
  Permutation initial_perm;

  /// Original node -> product id of (v, initial_perm); -1 for
  /// non-initial nodes.
  std::vector<std::int64_t> initial_product;

  std::size_t node_count() const { return orig_node.size(); }
};

/// Breadth-first closure from {(v, initial permutation) | v in
/// initials}. The initial permutation is the color declaration order.
/// Throws BudgetError when the reachable product exceeds `budget`
/// nodes.
ProductGame build_product(const EmersonLeiGame& game, const std::vector<Node>& initials,
                          std::size_t budget = 1'000'000);

/// Finite-memory strategy for Exists: memory values are permutations,
/// updates follow the record discipline, moves come from a positional
/// product strategy.
class MemoryStrategy {
 public:
  MemoryStrategy() = default;
  MemoryStrategy(std::vector<Permutation> memory, int initial,
                 std::vector<ColorSet> coloring,
                 std::map<std::pair<Node, int>, Node> moves);

  int initial_memory() const { return initial_; }
  const std::vector<Permutation>& memory_values() const { return memory_; }

  /// Memory index after taking any edge out of `from`; -1 when the
  /// successor permutation was never recorded.
  int update(int memory, Node from) const;

  std::optional<Node> move(Node v, int memory) const;

  const std::map<std::pair<Node, int>, Node>& moves() const { return moves_; }

 private:
  std::vector<Permutation> memory_;
  std::unordered_map<std::size_t, std::vector<int>> index_;  // hash -> candidates
  int initial_ = 0;
  std::vector<ColorSet> coloring_;
  std::map<std::pair<Node, int>, Node> moves_;

  int find(const Permutation& p) const;
};

struct ElSolveResult {
  WinnerMap winners;  // per original node
  MemoryStrategy strategy;
  SolveStats stats;
  std::size_t product_nodes = 0;
};

/// Solves the Emerson-Lei game through the record product: node v is
/// won by Exists iff (v, initial permutation) is. The product is solved
/// by the attractor-decomposition solver so a positional product
/// strategy exists to lift into the returned memory strategy.
ElSolveResult solve_el(const EmersonLeiGame& game, std::size_t budget = 1'000'000);

/// Ground-truth winner at a single node by brute force: enumerates all
/// positional Exists strategies on the reachable product and accepts
/// one iff no reachable strongly connected node set with an internal
/// edge has a recurring color set violating the objective. Exponential;
/// both budgets guard it.
Player el_oracle(const EmersonLeiGame& game, Node v, std::size_t node_budget = 4096,
                 std::uint64_t strategy_budget = std::uint64_t{1} << 20);

/// Checks the strategy wins from every region node: in the
/// strategy-restricted product reachable from {(v, initial) | v in
/// region}, every strongly connected subset with an internal edge must
/// have its color union satisfy the objective.
bool verify_el_strategy(const EmersonLeiGame& game, const MemoryStrategy& strategy,
                        const NodeSet& region);

/// True iff the product copies of the DAG nodes, restricted to the
/// reachable product, again form a positional DAG of the product arena.
bool check_dag_preservation(const EmersonLeiGame& game, const DagDecomposition& dag,
                            const ProductGame& product);

/// Shared recurrence check: true iff every strongly connected subset of
/// `reachable` with at least one internal edge has a color union
/// satisfying the objective. Works on any graph whose nodes carry color
/// sets. Throws BudgetError when more than 20 distinct colors occur.
bool recurrent_color_sets_satisfy(const std::vector<std::vector<Node>>& adj,
                                  const NodeSet& reachable,
                                  const std::vector<ColorSet>& node_colors,
                                  const ObjectiveFormula& objective);

}  // namespace pgdag
