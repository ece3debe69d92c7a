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
#include <functional>
#include <span>
#include <vector>

#include "pgdag/nodeset.hpp"

namespace pgdag {

/// Evaluator input for a strictly alternating nested fixpoint
///
///   GFP X_k . LFP X_{k-1} . ... . LFP X_1 . step(X_1, ..., X_k)
///
/// over subsets of a finite domain 0..domain_size-1. `step` receives the
/// k argument sets with X_1 at index 0 and must be monotone in every
/// argument; monotonicity is not checked at runtime and non-monotone
/// functions yield undefined results. The engine knows nothing about
/// games: any domain and any monotone step function will do.
struct NestedFixpointSpec {
  std::size_t domain_size = 0;
  int depth = 2;  // k, even, >= 2
  std::function<NodeSet(std::span<const NodeSet>)> step;
};

struct FixpointResult {
  NodeSet value;
  std::uint64_t evaluations = 0;  // exact number of step calls
  /// Applications of the level-i functional, index 1..depth.
  std::vector<std::uint64_t> level_iterations;
};

/// Naive iteration: odd levels start from the empty set and grow, even
/// levels start from the full domain and shrink; every change at an
/// outer level re-solves all inner levels from scratch. Termination is
/// guaranteed on finite domains with monotone step functions.
FixpointResult eval_nested_fixpoint(const NestedFixpointSpec& spec);

/// True iff re-running the inner depth-1 levels with X_depth = candidate
/// yields exactly candidate again.
bool check_fixpoint(const NestedFixpointSpec& spec, const NodeSet& candidate);

}  // namespace pgdag
