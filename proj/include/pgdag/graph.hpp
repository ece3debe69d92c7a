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

#include <optional>
#include <vector>

#include "pgdag/nodeset.hpp"

namespace pgdag {

struct SccResult {
  /// Component id per node, -1 for nodes outside the mask. Components
  /// are numbered in reverse topological order of the condensation
  /// (a component only has edges into lower-numbered components).
  std::vector<int> component;
  int count = 0;

  std::vector<std::vector<Node>> members() const;
};

/// Tarjan over the masked subgraph (iterative). Edges leaving the mask
/// are ignored. A null mask means all nodes.
SccResult strongly_connected_components(const std::vector<std::vector<Node>>& adj,
                                        const NodeSet* mask = nullptr);

/// Kahn's algorithm restricted to `within`; edges leaving the set are
/// ignored. Always picks the smallest available node, so the order is
/// canonical. Returns nullopt when the induced subgraph has a cycle.
std::optional<std::vector<Node>> topological_order(
    const std::vector<std::vector<Node>>& adj, const NodeSet& within);

/// Forward reachability from `start` in the (unmasked) graph.
NodeSet reachable_from(const std::vector<std::vector<Node>>& adj,
                       const std::vector<Node>& start);

}  // namespace pgdag
