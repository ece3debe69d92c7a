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

#include <string>
#include <vector>

#include "pgdag/arena.hpp"

namespace pgdag {

/// Parity game: arena plus a priority per node. A normalized game has
/// priorities in 1..levels() with levels() even; games straight from a
/// file or generator may still contain priority 0 until normalized.
struct ParityGame {
  Arena arena;
  std::vector<int> priority;

  std::size_t node_count() const { return arena.node_count(); }

  int max_priority() const;

  /// Number of priority levels k: the smallest even number >= max
  /// priority, at least 2. Empty levels are fine.
  int levels() const;

  /// Nodes of each priority 1..limit (index 0 unused). `limit` defaults
  /// to levels().
  std::vector<NodeSet> priority_classes(int limit = -1) const;
};

/// True iff every priority lies in 1..levels().
bool is_normalized(const ParityGame& game);

/// Shifts all priorities by +2 when priority 0 occurs anywhere (parity,
/// and therefore every winner, is preserved). Games without priority 0
/// are returned unchanged.
ParityGame normalize_priorities(const ParityGame& game);

/// Arena violations plus priority-range violations.
std::vector<std::string> validate_parity_game(const ParityGame& game);

}  // namespace pgdag
