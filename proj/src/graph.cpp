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

#include "pgdag/graph.hpp"

#include <algorithm>
#include <queue>

namespace pgdag {

std::vector<std::vector<Node>> SccResult::members() const {
  std::vector<std::vector<Node>> out(count);
  for (std::size_t v = 0; v < component.size(); ++v)
    if (component[v] >= 0) out[component[v]].push_back(static_cast<Node>(v));
  return out;
}

SccResult strongly_connected_components(const std::vector<std::vector<Node>>& adj,
                                        const NodeSet* mask) {
  const std::size_t n = adj.size();
  SccResult res;
  res.component.assign(n, -1);

  std::vector<int> index(n, -1);
  std::vector<int> lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Node> stack;
  int next_index = 0;

  struct Frame {
    Node v;
    std::size_t edge;
  };
  std::vector<Frame> frames;

  auto in_mask = [&](Node v) { return mask == nullptr || mask->test(v); };

  for (std::size_t root = 0; root < n; ++root) {
    if (!in_mask(static_cast<Node>(root)) || index[root] != -1) continue;
    frames.push_back({static_cast<Node>(root), 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(static_cast<Node>(root));
    on_stack[root] = true;

    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < adj[f.v].size()) {
        Node w = adj[f.v][f.edge++];
        if (w >= n || !in_mask(w)) continue;
        if (index[w] == -1) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        }
      } else {
        Node v = f.v;
        frames.pop_back();
        if (!frames.empty())
          lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
        if (lowlink[v] == index[v]) {
          int c = res.count++;
          Node w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            res.component[w] = c;
          } while (w != v);
        }
      }
    }
  }
  return res;
}

std::optional<std::vector<Node>> topological_order(
    const std::vector<std::vector<Node>>& adj, const NodeSet& within) {
  const std::size_t n = adj.size();
  std::vector<int> indegree(n, 0);
  within.for_each([&](Node v) {
    for (Node w : adj[v])
      if (w < n && within.test(w)) ++indegree[w];
  });

  std::priority_queue<Node, std::vector<Node>, std::greater<Node>> ready;
  within.for_each([&](Node v) {
    if (indegree[v] == 0) ready.push(v);
  });

  std::vector<Node> order;
  order.reserve(within.count());
  while (!ready.empty()) {
    Node v = ready.top();
    ready.pop();
    order.push_back(v);
    for (Node w : adj[v])
      if (w < n && within.test(w) && --indegree[w] == 0) ready.push(w);
  }
  if (order.size() != within.count()) return std::nullopt;
  return order;
}

NodeSet reachable_from(const std::vector<std::vector<Node>>& adj,
                       const std::vector<Node>& start) {
  NodeSet seen(adj.size());
  std::vector<Node> todo;
  for (Node v : start)
    if (!seen.test(v)) {
      seen.set(v);
      todo.push_back(v);
    }
  while (!todo.empty()) {
    Node v = todo.back();
    todo.pop_back();
    for (Node w : adj[v])
      if (w < adj.size() && !seen.test(w)) {
        seen.set(w);
        todo.push_back(w);
      }
  }
  return seen;
}

}  // namespace pgdag
