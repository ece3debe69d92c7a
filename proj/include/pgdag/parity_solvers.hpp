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
#include <span>
#include <vector>

#include "pgdag/parity_game.hpp"

namespace pgdag {

/// Winner per node; total by determinacy.
using WinnerMap = std::vector<Player>;

struct SolveStats {
  std::uint64_t f_evaluations = 0;     // step-function calls in the engine
  std::uint64_t cpre_evaluations = 0;  // one-step attraction calls
  std::uint64_t attractor_cost = 0;    // DAG edges explored, 0 for baseline
};

/// Partial positional strategy: moves[v] is the chosen successor or -1.
/// Every defined move belongs to a node owned by `player`.
struct PositionalStrategy {
  Player player = Player::Exists;
  std::vector<std::int64_t> moves;

  bool defined(Node v) const { return moves[v] >= 0; }
  Node move(Node v) const { return static_cast<Node>(moves[v]); }
};

/// One-step attraction for player Exists: existential nodes need some
/// successor in X, universal nodes need all successors in X.
NodeSet cpre(const ParityGame& game, const NodeSet& target);

/// Body of the nested fixpoint characterizing the Exists winning
/// region: the union over priorities i of (nodes of priority i)
/// intersected with cpre(X_i). `levels[i-1]` holds X_i; levels.size()
/// must be at least the maximum priority of the game.
NodeSet parity_step(const ParityGame& game, std::span<const NodeSet> levels);

/// Solves by evaluating the nested fixpoint of parity_step over the
/// whole node set with the generic engine. Requires a normalized game.
/// The Forall region is the complement of the computed Exists region.
std::pair<WinnerMap, SolveStats> solve_baseline(const ParityGame& game);

struct ZielonkaResult {
  WinnerMap winners;
  PositionalStrategy strategy_exists;
  PositionalStrategy strategy_forall;
};

/// Classic recursive attractor decomposition. Works for any game with
/// non-negative priorities (priority 0 counts as even) and returns
/// positional strategies that win on the respective regions. Shares no
/// code with the fixpoint path, which makes it a usable oracle.
ZielonkaResult solve_zielonka(const ParityGame& game);

/// Checks that `strategy` wins everywhere on `region` for `player`: in
/// the graph where the player's nodes follow the strategy and the
/// opponent keeps all moves, play must not escape the region and every
/// cycle's maximum priority must have the player's parity.
///
/// Throws std::invalid_argument when the strategy is undefined on a
/// region node of the player, and std::runtime_error when it prescribes
/// a move that leaves the region (an unsound strategy, not merely a
/// losing one). Opponent moves leaving the region return false.
bool verify_strategy(const ParityGame& game, const NodeSet& region,
                     const PositionalStrategy& strategy, Player player);

}  // namespace pgdag
