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

#include "pgdag/bench.hpp"

#include <chrono>
#include <stdexcept>

#include <json.hpp>

#include "pgdag/errors.hpp"
#include "pgdag/lar.hpp"

namespace pgdag {

namespace {

using nlohmann::json;

void expand_params(const std::string& family, const json& engines,
                   const std::map<std::string, std::vector<long long>>& lists,
                   std::map<std::string, long long> fixed,
                   std::map<std::string, std::vector<long long>>::const_iterator it,
                   std::vector<BenchCell>& out) {
  if (it == lists.end()) {
    BenchCell cell;
    cell.family = family;
    cell.params = std::move(fixed);
    for (const auto& e : engines) cell.engines.push_back(e.get<std::string>());
    out.push_back(std::move(cell));
    return;
  }
  auto next = it;
  ++next;
  for (long long v : it->second) {
    fixed[it->first] = v;
    expand_params(family, engines, lists, fixed, next, out);
  }
}

std::string engine_name(const std::string& raw) {
  if (raw == "accel" || raw == "accelerated") return "accelerated";
  if (raw == "baseline" || raw == "zielonka") return raw;
  throw std::invalid_argument("unknown engine '" + raw + "'");
}

}  // namespace

std::vector<BenchCell> parse_bench_spec(const std::string& json_text) {
  json spec = json::parse(json_text, nullptr, false);
  if (spec.is_discarded()) throw ParseError(1, "bench spec is not valid JSON");
  if (!spec.is_object() || !spec.contains("cells") || !spec["cells"].is_array())
    throw ParseError(1, "bench spec needs a top-level 'cells' array");

  std::vector<BenchCell> cells;
  for (const auto& cell : spec["cells"]) {
    if (!cell.contains("family") || !cell.contains("engines"))
      throw ParseError(1, "bench cell needs 'family' and 'engines'");
    std::map<std::string, std::vector<long long>> lists;
    std::map<std::string, long long> fixed;
    if (cell.contains("params")) {
      for (const auto& [key, value] : cell["params"].items()) {
        if (value.is_array()) {
          auto& list = lists[key];
          for (const auto& v : value) list.push_back(v.get<long long>());
          if (list.empty()) throw ParseError(1, "empty parameter list for '" + key + "'");
        } else {
          fixed[key] = value.get<long long>();
        }
      }
    }
    expand_params(cell["family"].get<std::string>(), cell["engines"], lists,
                  std::move(fixed), lists.begin(), cells);
  }
  return cells;
}

std::vector<BenchRecord> run_bench(const std::vector<BenchCell>& cells) {
  std::vector<BenchRecord> records;
  for (const auto& cell : cells) {
    BenchRecord base;
    base.family = cell.family;
    base.params = cell.params;

    // Shared per-cell setup; failures here mark every engine row.
    ParityGame solved;
    DagDecomposition dag;
    std::string setup_error;
    try {
      const std::uint64_t seed =
          static_cast<std::uint64_t>(cell.params.count("seed") ? cell.params.at("seed") : 1);
      std::map<std::string, long long> params = cell.params;
      params.erase("seed");
      AnyGame game = generate_game(cell.family, params, seed);
      if (std::holds_alternative<ParityGame>(game)) {
        solved = normalize_priorities(std::get<ParityGame>(game));
      } else {
        // Emerson-Lei cells measure the solved record product.
        const auto& el = std::get<EmersonLeiGame>(game);
        std::vector<Node> all(el.node_count());
        for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<Node>(v);
        solved = build_product(el, all).parity;
      }
      dag = detect_positional_dag(solved);
    } catch (const std::exception& e) {
      setup_error = e.what();
    }

    for (const auto& engine_raw : cell.engines) {
      BenchRecord rec = base;
      try {
        rec.engine = engine_name(engine_raw);
        if (!setup_error.empty()) {
          rec.error = setup_error;
          records.push_back(std::move(rec));
          continue;
        }
        rec.real_nodes = dag.real_count();
        rec.dag_nodes = dag.dag_nodes.count();

        auto start = std::chrono::steady_clock::now();
        if (rec.engine == "baseline") {
          auto [winners, stats] = solve_baseline(solved);
          rec.f_evaluations = stats.f_evaluations;
          rec.attractor_cost = stats.attractor_cost;
        } else if (rec.engine == "accelerated") {
          AcceleratedResult r = solve_accelerated(solved, dag);
          extend_to_dag(solved, dag, r.win_exists_real);
          rec.f_evaluations = r.stats.f_evaluations;
          rec.attractor_cost = r.stats.attractor_cost;
        } else {
          solve_zielonka(solved);
        }
        rec.wall_nanos = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(
                std::chrono::steady_clock::now() - start)
                .count());
      } catch (const std::exception& e) {
        rec.error = e.what();
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::string out =
      "family,params,engine,realNodes,dagNodes,fEvaluations,attractorCost,"
      "wallNanos,error\n";
  for (const auto& rec : records) {
    std::string params;
    for (const auto& [key, value] : rec.params) {
      if (!params.empty()) params += ";";
      params += key + "=" + std::to_string(value);
    }
    out += rec.family + "," + params + "," + rec.engine + "," +
           std::to_string(rec.real_nodes) + "," + std::to_string(rec.dag_nodes) +
           "," + std::to_string(rec.f_evaluations) + "," +
           std::to_string(rec.attractor_cost) + "," + std::to_string(rec.wall_nanos) +
           "," + rec.error + "\n";
  }
  return out;
}

ChainAttractor::ChainAttractor(const ParityGame& game, const DagDecomposition& dag)
    : game_(game), dag_(dag) {
  const std::size_t n = game.node_count();
  exit_of_.assign(n, 0);
  max_interior_.assign(n, 0);
  for (auto it = dag.topo_order.rbegin(); it != dag.topo_order.rend(); ++it) {
    Node w = *it;
    auto succ = game.arena.successors(w);
    if (succ.size() != 1)
      throw std::invalid_argument("chain attractor needs single-successor DAG nodes");
    Node s = succ[0];
    if (dag.real_nodes.test(s)) {
      exit_of_[w] = s;
      max_interior_[w] = game.priority[w];
    } else {
      exit_of_[w] = exit_of_[s];
      max_interior_[w] = std::max(game.priority[w], max_interior_[s]);
    }
  }
}

NodeSet ChainAttractor::operator()(std::span<const NodeSet> targets) const {
  NodeSet out(game_.node_count());
  dag_.real_nodes.for_each([&](Node v) {
    const int q0 = game_.priority[v];
    auto decide = [&](Node s) {
      if (dag_.real_nodes.test(s)) return targets[q0 - 1].test(s);
      const int acc = std::max(q0, max_interior_[s]);
      return targets[acc - 1].test(exit_of_[s]);
    };
    bool win;
    if (game_.arena.owner(v) == Player::Exists) {
      win = false;
      for (Node s : game_.arena.successors(v))
        if (decide(s)) {
          win = true;
          break;
        }
    } else {
      win = true;
      for (Node s : game_.arena.successors(v))
        if (!decide(s)) {
          win = false;
          break;
        }
    }
    if (win) out.set(v);
  });
  return out;
}

}  // namespace pgdag
