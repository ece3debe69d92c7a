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

#include "pgdag/fixpoint.hpp"

#include <stdexcept>

namespace pgdag {

namespace {

struct Evaluator {
  const NestedFixpointSpec& spec;
  std::vector<NodeSet> args;  // slot i-1 holds X_i
  FixpointResult* out;

  NodeSet solve(int level) {
    if (level == 0) {
      ++out->evaluations;
      return spec.step(args);
    }
    NodeSet current = (level % 2 == 1) ? NodeSet(spec.domain_size)
                                       : NodeSet::full(spec.domain_size);
    for (;;) {
      args[level - 1] = current;
      ++out->level_iterations[level];
      NodeSet next = solve(level - 1);
      if (next == current) break;
      current = std::move(next);
    }
    return current;
  }
};

void check_spec(const NestedFixpointSpec& spec) {
  if (spec.depth < 2 || spec.depth % 2 != 0)
    throw std::invalid_argument("fixpoint depth must be even and >= 2");
  if (!spec.step) throw std::invalid_argument("fixpoint step function missing");
}

}  // namespace

FixpointResult eval_nested_fixpoint(const NestedFixpointSpec& spec) {
  check_spec(spec);
  FixpointResult result;
  result.level_iterations.assign(spec.depth + 1, 0);
  Evaluator ev{spec, std::vector<NodeSet>(spec.depth, NodeSet(spec.domain_size)),
               &result};
  result.value = ev.solve(spec.depth);
  return result;
}

bool check_fixpoint(const NestedFixpointSpec& spec, const NodeSet& candidate) {
  check_spec(spec);
  FixpointResult scratch;
  scratch.level_iterations.assign(spec.depth + 1, 0);
  Evaluator ev{spec, std::vector<NodeSet>(spec.depth, NodeSet(spec.domain_size)),
               &scratch};
  ev.args[spec.depth - 1] = candidate;
  return ev.solve(spec.depth - 1) == candidate;
}

}  // namespace pgdag
