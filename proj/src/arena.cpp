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

#include "pgdag/arena.hpp"

#include <stdexcept>

namespace pgdag {

Arena::Arena(std::vector<Player> owners,
             const std::vector<std::vector<Node>>& successors)
    : owner_(std::move(owners)) {
  if (owner_.size() != successors.size())
    throw std::invalid_argument("owner and successor lists disagree in size");
  const std::size_t n = owner_.size();

  succ_off_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v)
    succ_off_[v + 1] = succ_off_[v] + successors[v].size();
  succ_flat_.reserve(succ_off_[n]);
  for (std::size_t v = 0; v < n; ++v)
    succ_flat_.insert(succ_flat_.end(), successors[v].begin(), successors[v].end());

  // Transpose over the in-range edges only; out-of-range successors are
  // kept in succ_flat_ so that validate_arena can report them.
  pred_off_.assign(n + 1, 0);
  for (Node w : succ_flat_)
    if (w < n) ++pred_off_[w + 1];
  for (std::size_t v = 0; v < n; ++v) pred_off_[v + 1] += pred_off_[v];
  pred_flat_.resize(pred_off_[n]);
  std::vector<std::size_t> cursor(pred_off_.begin(), pred_off_.end() - 1);
  for (std::size_t v = 0; v < n; ++v)
    for (Node w : successors[v])
      if (w < n) pred_flat_[cursor[w]++] = static_cast<Node>(v);
}

std::vector<std::vector<Node>> Arena::successor_lists() const {
  std::vector<std::vector<Node>> out(node_count());
  for (std::size_t v = 0; v < node_count(); ++v) {
    auto s = successors(static_cast<Node>(v));
    out[v].assign(s.begin(), s.end());
  }
  return out;
}

NodeSet Arena::nodes_owned_by(Player p) const {
  NodeSet s(node_count());
  for (std::size_t v = 0; v < node_count(); ++v)
    if (owner_[v] == p) s.set(static_cast<Node>(v));
  return s;
}

std::vector<std::string> validate_arena(const Arena& arena) {
  std::vector<std::string> issues;
  const std::size_t n = arena.node_count();
  for (std::size_t v = 0; v < n; ++v) {
    auto succ = arena.successors(static_cast<Node>(v));
    if (succ.empty())
      issues.push_back("node " + std::to_string(v) + " has no successor");
    for (Node w : succ)
      if (w >= n)
        issues.push_back("node " + std::to_string(v) + ": successor " +
                         std::to_string(w) + " out of range");
  }
  return issues;
}

}  // namespace pgdag
