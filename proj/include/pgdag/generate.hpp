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
#include <string>
#include <variant>

#include "pgdag/el_game.hpp"
#include "pgdag/parity_game.hpp"

namespace pgdag {

/// Seeded random parity game: n nodes, out-degrees in 1..out_degree,
/// priorities in 1..k. Same seed and parameters give the same game.
ParityGame generate_random_parity(int n, int out_degree, int k, std::uint64_t seed);

/// Real core of `real_core` nodes with self-loops plus `width` chains of
/// `depth` universal nodes each, connecting real nodes forward so no
/// chain node lies on a cycle. Chain interiors share one priority per
/// chain, so attraction through a chain does not depend on its length.
/// The first chain carries priority 1 into a priority-2 exit, which
/// forces the unrestricted fixpoint to walk it step by step. The core's
/// random draws do not depend on depth: the same seed yields the same
/// core for every depth.
ParityGame generate_dag_chain(int real_core, int depth, int width, int k,
                              std::uint64_t seed);

/// Seeded random Emerson-Lei game: random arena, uniformly random color
/// subsets per node, and a small random objective over the colors.
EmersonLeiGame generate_random_el(int n, int out_degree, int color_count,
                                  std::uint64_t seed);

using AnyGame = std::variant<ParityGame, EmersonLeiGame>;

/// Name-based dispatch used by the CLI and the bench runner. Families:
///   random-parity: n, out-degree (3), k (4)
///   dag-chain:     m, depth, width (1), k (2)
///   random-el:     n, out-degree (2), colors (2)
/// Throws std::invalid_argument for unknown families or bad parameters.
AnyGame generate_game(const std::string& family,
                      const std::map<std::string, long long>& params,
                      std::uint64_t seed);

}  // namespace pgdag
