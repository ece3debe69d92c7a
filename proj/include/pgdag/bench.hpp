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
#include <vector>

#include "pgdag/dag_accel.hpp"
#include "pgdag/generate.hpp"

namespace pgdag {

struct BenchCell {
  std::string family;
  std::map<std::string, long long> params;  // includes "seed"
  std::vector<std::string> engines;         // baseline | accelerated | zielonka
};

struct BenchRecord {
  std::string family;
  std::map<std::string, long long> params;
  std::string engine;
  std::size_t real_nodes = 0;
  std::size_t dag_nodes = 0;
  std::uint64_t f_evaluations = 0;
  std::uint64_t attractor_cost = 0;
  std::uint64_t wall_nanos = 0;
  std::string error;  // empty on success
};

/// Grid file: {"cells": [{"family": ..., "params": {...}, "engines":
/// [...]}]}. Parameter values may be arrays; those expand into the
/// cartesian product in key order. Throws ParseError on malformed JSON.
std::vector<BenchCell> parse_bench_spec(const std::string& json_text);

/// Runs each cell with each engine sequentially (counters stay
/// deterministic). Per-cell failures become records with a non-empty
/// error field; the run continues.
std::vector<BenchRecord> run_bench(const std::vector<BenchCell>& cells);

/// CSV with the fixed header
/// family,params,engine,realNodes,dagNodes,fEvaluations,attractorCost,wallNanos,error
/// where params is a semicolon-joined key=value list in key order.
std::string bench_csv(const std::vector<BenchRecord>& records);

/// Closed-form attractor for chain-shaped DAGs (every DAG node has
/// exactly one successor). Chains collapse into per-node summaries at
/// construction, so a call touches only real nodes and never walks
/// chain interiors: the per-call cost is independent of chain length.
/// Extensionally equal to dag_attractor on such decompositions.
class ChainAttractor {
 public:
  ChainAttractor(const ParityGame& game, const DagDecomposition& dag);

  NodeSet operator()(std::span<const NodeSet> targets) const;

 private:
  const ParityGame& game_;
  const DagDecomposition& dag_;
  std::vector<Node> exit_of_;       // per DAG node: the real node it drains to
  std::vector<int> max_interior_;   // max priority from the node to the exit
};

}  // namespace pgdag
