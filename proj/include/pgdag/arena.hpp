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
#include <string>
#include <vector>

#include "pgdag/nodeset.hpp"

namespace pgdag {

enum class Player : std::uint8_t { Exists = 0, Forall = 1 };

constexpr Player opponent(Player p) {
  return p == Player::Exists ? Player::Forall : Player::Exists;
}

inline const char* player_name(Player p) {
  return p == Player::Exists ? "exists" : "forall";
}

/// Two-player game arena over dense nodes 0..n-1. Successor order is
/// declaration order; all tie-breaking downstream follows it. Immutable
/// after construction. Predecessor lists are the transpose of the
/// in-range successor edges.
class Arena {
 public:
  Arena() = default;
  Arena(std::vector<Player> owners, const std::vector<std::vector<Node>>& successors);

  std::size_t node_count() const { return owner_.size(); }
  std::size_t edge_count() const { return succ_flat_.size(); }

  Player owner(Node v) const { return owner_[v]; }

  std::span<const Node> successors(Node v) const {
    return {succ_flat_.data() + succ_off_[v], succ_off_[v + 1] - succ_off_[v]};
  }
  std::span<const Node> predecessors(Node v) const {
    return {pred_flat_.data() + pred_off_[v], pred_off_[v + 1] - pred_off_[v]};
  }

  std::vector<std::vector<Node>> successor_lists() const;

  NodeSet nodes_owned_by(Player p) const;

 private:
  std::vector<Player> owner_;
  std::vector<Node> succ_flat_;
  std::vector<std::size_t> succ_off_;
  std::vector<Node> pred_flat_;
  std::vector<std::size_t> pred_off_;
};

/// Reports every arena invariant violation; empty iff the arena is valid.
/// Each entry names the node and the broken rule.
std::vector<std::string> validate_arena(const Arena& arena);

}  // namespace pgdag
