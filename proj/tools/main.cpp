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

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgdag/bench.hpp"
#include "pgdag/dag_accel.hpp"
#include "pgdag/generate.hpp"
#include "pgdag/io.hpp"
#include "pgdag/lar.hpp"

namespace {

using nlohmann::json;
using namespace pgdag;

// Exit codes: 0 ok, 1 validation error (including --verify mismatches),
// 2 syntax error, 3 budget exceeded.
constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitSyntax = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError({"cannot open file '" + path + "'"});
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError({"cannot write file '" + path + "'"});
  out << text;
}

struct SolveOutput {
  WinnerMap winners;
  SolveStats stats;
  std::size_t real_nodes = 0;
  std::size_t dag_nodes = 0;
  std::size_t product_nodes = 0;
  std::uint64_t wall_nanos = 0;
};

SolveOutput solve_parity(const ParityGame& game, const std::string& engine,
                         bool verify) {
  SolveOutput out;
  auto start = std::chrono::steady_clock::now();
  if (engine == "baseline") {
    auto [winners, stats] = solve_baseline(game);
    out.winners = std::move(winners);
    out.stats = stats;
    out.real_nodes = game.node_count();
  } else if (engine == "accel") {
    DagDecomposition dag = detect_positional_dag(game);
    out.real_nodes = dag.real_count();
    out.dag_nodes = dag.dag_nodes.count();
    AcceleratedOptions options;
    unsigned bad_witnesses = 0;
    if (verify) {
      options.observer = [&](std::span<const NodeSet> targets,
                             const DagAttractorResult& r) {
        for (const auto& wit : r.witnesses)
          if (!verify_attraction_witness(game, dag, targets, wit.source, wit))
            ++bad_witnesses;
      };
    }
    AcceleratedResult r = solve_accelerated(game, dag, options);
    out.winners = extend_to_dag(game, dag, r.win_exists_real);
    out.stats = r.stats;
    if (bad_witnesses > 0)
      throw ValidationError({"verification failed: " + std::to_string(bad_witnesses) +
                             " unsound attraction witnesses"});
  } else {
    out.winners = solve_zielonka(game).winners;
    out.real_nodes = game.node_count();
  }
  out.wall_nanos = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now() - start)
          .count());

  if (verify) {
    ZielonkaResult z = solve_zielonka(game);
    if (z.winners != out.winners)
      throw ValidationError({"verification failed: engine disagrees with the "
                             "attractor-decomposition oracle"});
    NodeSet win_e(game.node_count()), win_a(game.node_count());
    for (Node v = 0; v < game.node_count(); ++v)
      (z.winners[v] == Player::Exists ? win_e : win_a).set(v);
    if (!verify_strategy(game, win_e, z.strategy_exists, Player::Exists) ||
        !verify_strategy(game, win_a, z.strategy_forall, Player::Forall))
      throw ValidationError({"verification failed: oracle strategy is not winning"});
  }
  return out;
}

SolveOutput solve_el_file(const EmersonLeiGame& el, const std::string& engine,
                          bool verify, std::size_t budget) {
  std::vector<Node> all(el.node_count());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<Node>(v);
  ProductGame product = build_product(el, all, budget);

  SolveOutput inner = solve_parity(product.parity, engine, verify);
  SolveOutput out;
  out.stats = inner.stats;
  out.real_nodes = inner.real_nodes;
  out.dag_nodes = inner.dag_nodes;
  out.product_nodes = product.node_count();
  out.wall_nanos = inner.wall_nanos;
  out.winners.resize(el.node_count());
  for (std::size_t v = 0; v < el.node_count(); ++v)
    out.winners[v] = inner.winners[product.initial_product[v]];

  if (verify) {
    ElSolveResult direct = solve_el(el, budget);
    if (direct.winners != out.winners)
      throw ValidationError({"verification failed: record-product engines disagree"});
    NodeSet region(el.node_count());
    for (Node v = 0; v < el.node_count(); ++v)
      if (direct.winners[v] == Player::Exists) region.set(v);
    if (!verify_el_strategy(el, direct.strategy, region))
      throw ValidationError({"verification failed: lifted memory strategy is not winning"});
  }
  return out;
}

void print_solve(const SolveOutput& out, const std::string& engine, bool as_json) {
  if (as_json) {
    json j;
    j["winners"] = json::array();
    for (Player p : out.winners) j["winners"].push_back(static_cast<int>(p));
    j["stats"] = {{"engine", engine == "accel" ? "accelerated" : engine},
                  {"fEvaluations", out.stats.f_evaluations},
                  {"cpreEvaluations", out.stats.cpre_evaluations},
                  {"attractorCost", out.stats.attractor_cost},
                  {"realNodes", out.real_nodes},
                  {"dagNodes", out.dag_nodes},
                  {"productNodes", out.product_nodes},
                  {"wallNanos", out.wall_nanos}};
    std::cout << j.dump() << "\n";
  } else {
    for (std::size_t v = 0; v < out.winners.size(); ++v)
      std::cout << v << " " << player_name(out.winners[v]) << "\n";
    std::cerr << "engine=" << engine << " fEvaluations=" << out.stats.f_evaluations
              << " attractorCost=" << out.stats.attractor_cost
              << " dagNodes=" << out.dag_nodes << " realNodes=" << out.real_nodes
              << "\n";
  }
}

json permutation_names(const Permutation& perm, const std::vector<std::string>& colors) {
  json arr = json::array();
  for (int i = 1; i <= perm.size(); ++i) arr.push_back(colors[perm.at(i)]);
  return arr;
}

int run(int argc, char** argv) {
  CLI::App app{"parity and Emerson-Lei game solver with DAG-accelerated "
               "fixpoint evaluation"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "solve a game file and print winners");
  std::string engine = "baseline";
  std::string format = "auto";
  std::string file;
  bool as_json = false;
  bool verify = false;
  std::size_t budget = 1'000'000;
  solve->add_option("--engine", engine, "baseline | accel | zielonka")
      ->check(CLI::IsMember({"baseline", "accel", "zielonka"}));
  solve->add_option("--format", format, "pg | el | auto")
      ->check(CLI::IsMember({"pg", "el", "auto"}));
  solve->add_flag("--json", as_json, "machine-readable output");
  solve->add_flag("--verify", verify, "cross-check winners, strategies and witnesses");
  solve->add_option("--budget", budget, "record product node budget");
  solve->add_option("file", file, "input game file")->required();

  // convert
  auto* convert = app.add_subcommand("convert", "reduce an Emerson-Lei game to a "
                                                "parity game in pg format");
  std::string convert_to = "pg";
  std::string convert_file;
  std::string convert_out;
  std::string convert_map;
  std::size_t convert_budget = 1'000'000;
  convert->add_option("--to", convert_to, "target format (pg)")
      ->check(CLI::IsMember({"pg"}));
  convert->add_option("-o,--output", convert_out, "output file (stdout if omitted)");
  convert->add_option("--map", convert_map,
                      "sidecar JSON mapping product nodes to (node, permutation); "
                      "defaults to OUTPUT.map.json when -o is given");
  convert->add_option("--budget", convert_budget, "record product node budget");
  convert->add_option("file", convert_file, "input elgame file")->required();

  // dag
  auto* dag_cmd = app.add_subcommand("dag", "report the detected DAG decomposition");
  std::string dag_file;
  bool dag_json = false;
  dag_cmd->add_flag("--json", dag_json, "machine-readable output");
  dag_cmd->add_option("file", dag_file, "input game file")->required();

  // gen
  auto* gen = app.add_subcommand("gen", "generate a seeded benchmark game");
  std::string family;
  std::uint64_t seed = 1;
  std::string gen_out;
  long long opt_n = -1, opt_out_degree = -1, opt_k = -1, opt_m = -1, opt_depth = -1,
            opt_width = -1, opt_colors = -1;
  gen->add_option("--family", family, "random-parity | dag-chain | random-el")
      ->required();
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--n", opt_n, "node count (random families)");
  gen->add_option("--out-degree", opt_out_degree, "maximum out-degree");
  gen->add_option("--k", opt_k, "number of priorities");
  gen->add_option("--m", opt_m, "real core size (dag-chain)");
  gen->add_option("--depth", opt_depth, "chain length (dag-chain)");
  gen->add_option("--width", opt_width, "number of chains (dag-chain)");
  gen->add_option("--colors", opt_colors, "color count (random-el)");
  gen->add_option("-o,--output", gen_out, "output file (stdout if omitted)");

  // bench
  auto* bench = app.add_subcommand("bench", "run a benchmark grid and emit CSV");
  std::string bench_spec;
  std::string bench_out;
  bench->add_option("--spec", bench_spec, "grid file (JSON)")->required();
  bench->add_option("-o,--output", bench_out, "CSV output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (*solve) {
    std::string text = read_file(file);
    GameFormat fmt = format == "pg"   ? GameFormat::Parity
                     : format == "el" ? GameFormat::EmersonLei
                                      : sniff_format(text);
    SolveOutput out;
    if (fmt == GameFormat::Parity) {
      out = solve_parity(load_parity_game(text).game, engine, verify);
    } else {
      out = solve_el_file(load_el_game(text).game, engine, verify, budget);
    }
    print_solve(out, engine, as_json);
    return kExitOk;
  }

  if (*convert) {
    LoadedElGame loaded = load_el_game(read_file(convert_file));
    const EmersonLeiGame& el = loaded.game;
    std::vector<Node> all(el.node_count());
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<Node>(v);
    ProductGame product = build_product(el, all, convert_budget);

    std::string text = write_parity_game(product.parity);
    if (convert_out.empty())
      std::cout << text;
    else
      write_file(convert_out, text);

    std::string map_path = convert_map;
    if (map_path.empty() && !convert_out.empty()) map_path = convert_out + ".map.json";
    if (!map_path.empty()) {
      json map;
      map["initialPermutation"] = permutation_names(product.initial_perm, el.colors);
      map["nodes"] = json::array();
      for (Node id = 0; id < product.node_count(); ++id)
        map["nodes"].push_back(
            {{"id", id},
             {"node", product.orig_node[id]},
             {"perm", permutation_names(product.perms[product.perm_id[id]], el.colors)}});
      map["initials"] = json::object();
      for (std::size_t v = 0; v < el.node_count(); ++v)
        map["initials"][std::to_string(v)] = product.initial_product[v];
      write_file(map_path, map.dump(2) + "\n");
    }
    return kExitOk;
  }

  if (*dag_cmd) {
    std::string text = read_file(dag_file);
    DagDecomposition dag;
    if (sniff_format(text) == GameFormat::Parity)
      dag = detect_positional_dag(load_parity_game(text).game);
    else
      dag = detect_positional_dag(load_el_game(text).game.arena);
    if (dag_json) {
      json j = {{"dagNodes", dag.dag_nodes.count()},
                {"realNodes", dag.real_count()},
                {"demoted", dag.demoted}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "dagNodes=" << dag.dag_nodes.count()
                << " realNodes=" << dag.real_count() << " demoted=" << dag.demoted
                << "\n";
    }
    return kExitOk;
  }

  if (*gen) {
    std::map<std::string, long long> params;
    if (opt_n >= 0) params["n"] = opt_n;
    if (opt_out_degree >= 0) params["out-degree"] = opt_out_degree;
    if (opt_k >= 0) params["k"] = opt_k;
    if (opt_m >= 0) params["m"] = opt_m;
    if (opt_depth >= 0) params["depth"] = opt_depth;
    if (opt_width >= 0) params["width"] = opt_width;
    if (opt_colors >= 0) params["colors"] = opt_colors;
    AnyGame game = generate_game(family, params, seed);
    std::string text = std::holds_alternative<ParityGame>(game)
                           ? write_parity_game(std::get<ParityGame>(game))
                           : write_el_game(std::get<EmersonLeiGame>(game));
    if (gen_out.empty())
      std::cout << text;
    else
      write_file(gen_out, text);
    return kExitOk;
  }

  if (*bench) {
    auto cells = parse_bench_spec(read_file(bench_spec));
    auto records = run_bench(cells);
    std::string csv = bench_csv(records);
    if (bench_out.empty())
      std::cout << csv;
    else
      write_file(bench_out, csv);
    return kExitOk;
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kExitSyntax;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
