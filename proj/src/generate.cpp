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

#include "pgdag/generate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace pgdag {

namespace {

// Explicit modulo on the raw engine output keeps the draw sequence
// independent of standard-library distribution details.
struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  std::uint64_t raw() { return engine(); }
  int below(int bound) { return static_cast<int>(raw() % static_cast<std::uint64_t>(bound)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool coin() { return raw() & 1; }
};

std::vector<Node> draw_targets(Rng& rng, int n, int out_degree) {
  int d = rng.between(1, out_degree);
  std::vector<Node> targets;
  for (int i = 0; i < d; ++i) {
    Node t = static_cast<Node>(rng.below(n));
    if (std::find(targets.begin(), targets.end(), t) == targets.end())
      targets.push_back(t);
  }
  return targets;
}

long long param_or(const std::map<std::string, long long>& params,
                   const std::string& key, long long fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

long long required_param(const std::map<std::string, long long>& params,
                         const std::string& key) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("missing generator parameter '" + key + "'");
  return it->second;
}

}  // namespace

ParityGame generate_random_parity(int n, int out_degree, int k, std::uint64_t seed) {
  if (n < 1 || out_degree < 1 || k < 1)
    throw std::invalid_argument("random-parity: n, out-degree and k must be >= 1");
  Rng rng(seed);
  std::vector<Player> owners(n);
  std::vector<int> priorities(n);
  std::vector<std::vector<Node>> succ(n);
  for (int v = 0; v < n; ++v) {
    owners[v] = rng.coin() ? Player::Forall : Player::Exists;
    priorities[v] = rng.between(1, k);
    succ[v] = draw_targets(rng, n, out_degree);
  }
  return ParityGame{Arena(std::move(owners), succ), std::move(priorities)};
}

ParityGame generate_dag_chain(int real_core, int depth, int width, int k,
                              std::uint64_t seed) {
  if (real_core < 2) throw std::invalid_argument("dag-chain: m must be >= 2");
  if (depth < 1 || width < 1)
    throw std::invalid_argument("dag-chain: depth and width must be >= 1");
  if (k < 2) throw std::invalid_argument("dag-chain: k must be >= 2");

  Rng rng(seed);
  const int n = real_core + width * depth;
  std::vector<Player> owners(n, Player::Forall);
  std::vector<int> priorities(n, 1);
  std::vector<std::vector<Node>> succ(n);

  // Draw order: core first, then one priority per chain. The sequence
  // never depends on depth, so a fixed seed pins the core across
  // different chain lengths.
  for (int v = 0; v < real_core; ++v) {
    owners[v] = rng.coin() ? Player::Forall : Player::Exists;
    priorities[v] = rng.between(1, k);
    succ[v].push_back(static_cast<Node>(v));  // self-loop keeps it on a cycle
  }
  std::vector<int> chain_priority(width);
  for (int c = 0; c < width; ++c) chain_priority[c] = rng.between(1, k);

  // The first chain is pinned to priority 1 with a priority-2 exit so
  // the full-domain fixpoint has to walk it one node per iteration.
  chain_priority[0] = 1;
  priorities[1] = 2;

  for (int c = 0; c < width; ++c) {
    const Node from = static_cast<Node>(c % (real_core - 1));
    const Node to = from + 1;
    const int base = real_core + c * depth;
    succ[from].push_back(static_cast<Node>(base));
    for (int j = 0; j < depth; ++j) {
      owners[base + j] = Player::Forall;
      priorities[base + j] = chain_priority[c];
      succ[base + j].push_back(j + 1 < depth ? static_cast<Node>(base + j + 1) : to);
    }
  }
  return ParityGame{Arena(std::move(owners), succ), std::move(priorities)};
}

EmersonLeiGame generate_random_el(int n, int out_degree, int color_count,
                                  std::uint64_t seed) {
  if (n < 1 || out_degree < 1)
    throw std::invalid_argument("random-el: n and out-degree must be >= 1");
  if (color_count < 1 || color_count > 8)
    throw std::invalid_argument("random-el: colors must be in 1..8");

  Rng rng(seed);
  std::vector<Player> owners(n);
  std::vector<std::vector<Node>> succ(n);
  EmersonLeiGame el;
  for (int c = 0; c < color_count; ++c)
    el.colors.push_back(std::string(1, static_cast<char>('a' + c)));
  el.coloring.resize(n);
  for (int v = 0; v < n; ++v) {
    owners[v] = rng.coin() ? Player::Forall : Player::Exists;
    succ[v] = draw_targets(rng, n, out_degree);
    el.coloring[v] = static_cast<ColorSet>(rng.below(1 << color_count));
  }
  el.arena = Arena(std::move(owners), succ);

  auto literal = [&]() {
    int c = rng.below(color_count);
    return rng.coin() ? ObjectiveFormula::inf(c) : ObjectiveFormula::fin(c);
  };
  ObjectiveFormula f = literal();
  const int extra = rng.between(1, 2);
  for (int i = 0; i < extra; ++i) {
    if (rng.coin())
      f = ObjectiveFormula::conj(std::move(f), literal());
    else
      f = ObjectiveFormula::disj(std::move(f), literal());
  }
  el.objective = std::move(f);
  return el;
}

AnyGame generate_game(const std::string& family,
                      const std::map<std::string, long long>& params,
                      std::uint64_t seed) {
  auto as_int = [](long long v) { return static_cast<int>(v); };
  if (family == "random-parity") {
    return generate_random_parity(as_int(required_param(params, "n")),
                                  as_int(param_or(params, "out-degree", 3)),
                                  as_int(param_or(params, "k", 4)), seed);
  }
  if (family == "dag-chain") {
    return generate_dag_chain(as_int(required_param(params, "m")),
                              as_int(required_param(params, "depth")),
                              as_int(param_or(params, "width", 1)),
                              as_int(param_or(params, "k", 2)), seed);
  }
  if (family == "random-el") {
    return generate_random_el(as_int(required_param(params, "n")),
                              as_int(param_or(params, "out-degree", 2)),
                              as_int(param_or(params, "colors", 2)), seed);
  }
  throw std::invalid_argument("unknown game family '" + family + "'");
}

}  // namespace pgdag
