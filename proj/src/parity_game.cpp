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

#include "pgdag/parity_game.hpp"

#include <algorithm>

namespace pgdag {

int ParityGame::max_priority() const {
  int m = 0;
  for (int p : priority) m = std::max(m, p);
  return m;
}

int ParityGame::levels() const {
  int m = max_priority();
  if (m < 2) return 2;
  return m + (m % 2);
}

std::vector<NodeSet> ParityGame::priority_classes(int limit) const {
  if (limit < 0) limit = levels();
  std::vector<NodeSet> classes(limit + 1, NodeSet(node_count()));
  for (std::size_t v = 0; v < priority.size(); ++v)
    if (priority[v] >= 1 && priority[v] <= limit)
      classes[priority[v]].set(static_cast<Node>(v));
  return classes;
}

bool is_normalized(const ParityGame& game) {
  for (int p : game.priority)
    if (p < 1) return false;
  return true;
}

ParityGame normalize_priorities(const ParityGame& game) {
  bool has_zero = std::find(game.priority.begin(), game.priority.end(), 0) !=
                  game.priority.end();
  if (!has_zero) return game;
  ParityGame out = game;
  for (int& p : out.priority) p += 2;
  return out;
}

std::vector<std::string> validate_parity_game(const ParityGame& game) {
  std::vector<std::string> issues = validate_arena(game.arena);
  if (game.priority.size() != game.node_count())
    issues.push_back("priority map does not cover all nodes");
  for (std::size_t v = 0; v < game.priority.size(); ++v)
    if (game.priority[v] < 0)
      issues.push_back("node " + std::to_string(v) + ": negative priority");
  return issues;
}

}  // namespace pgdag
