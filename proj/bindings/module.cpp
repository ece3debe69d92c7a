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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pgdag/bench.hpp"
#include "pgdag/dag_accel.hpp"
#include "pgdag/generate.hpp"
#include "pgdag/io.hpp"
#include "pgdag/lar.hpp"

namespace py = pybind11;
using namespace pgdag;

namespace {

std::vector<int> winners_to_ints(const WinnerMap& winners) {
  std::vector<int> out;
  out.reserve(winners.size());
  for (Player p : winners) out.push_back(static_cast<int>(p));
  return out;
}

py::dict stats_dict(const SolveStats& stats) {
  py::dict d;
  d["f_evaluations"] = stats.f_evaluations;
  d["cpre_evaluations"] = stats.cpre_evaluations;
  d["attractor_cost"] = stats.attractor_cost;
  return d;
}

py::dict solve_parity_py(const ParityGame& game, const std::string& engine) {
  py::dict out;
  if (engine == "baseline") {
    auto [winners, stats] = solve_baseline(game);
    out["winners"] = winners_to_ints(winners);
    out["stats"] = stats_dict(stats);
  } else if (engine == "accel" || engine == "accelerated") {
    DagDecomposition dag = detect_positional_dag(game);
    AcceleratedResult r = solve_accelerated(game, dag);
    out["winners"] = winners_to_ints(extend_to_dag(game, dag, r.win_exists_real));
    out["stats"] = stats_dict(r.stats);
    out["dag_nodes"] = dag.dag_nodes.count();
    out["real_nodes"] = dag.real_count();
  } else if (engine == "zielonka") {
    ZielonkaResult z = solve_zielonka(game);
    out["winners"] = winners_to_ints(z.winners);
    out["stats"] = stats_dict(SolveStats{});
  } else {
    throw std::invalid_argument("unknown engine '" + engine + "'");
  }
  return out;
}

std::map<std::string, long long> params_from_kwargs(const py::kwargs& kwargs) {
  std::map<std::string, long long> params;
  for (auto item : kwargs) {
    std::string key = py::cast<std::string>(item.first);
    for (auto& c : key)
      if (c == '_') c = '-';
    params[key] = py::cast<long long>(item.second);
  }
  return params;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Parity and Emerson-Lei game solving with DAG-accelerated nested "
            "fixpoint evaluation";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<ValidationError>(m, "ValidationError");
  py::register_exception<BudgetError>(m, "BudgetError");

  py::class_<ParityGame>(m, "ParityGame")
      .def_property_readonly("node_count",
                             [](const ParityGame& g) { return g.node_count(); })
      .def_property_readonly("priorities",
                             [](const ParityGame& g) { return g.priority; })
      .def_property_readonly("levels", [](const ParityGame& g) { return g.levels(); })
      .def("owner",
           [](const ParityGame& g, Node v) { return static_cast<int>(g.arena.owner(v)); })
      .def("successors",
           [](const ParityGame& g, Node v) {
             auto s = g.arena.successors(v);
             return std::vector<Node>(s.begin(), s.end());
           })
      .def("__repr__", [](const ParityGame& g) {
        return "<ParityGame with " + std::to_string(g.node_count()) + " nodes, " +
               std::to_string(g.levels()) + " levels>";
      });

  py::class_<EmersonLeiGame>(m, "EmersonLeiGame")
      .def_property_readonly("node_count",
                             [](const EmersonLeiGame& g) { return g.node_count(); })
      .def_property_readonly("colors",
                             [](const EmersonLeiGame& g) { return g.colors; })
      .def_property_readonly(
          "objective",
          [](const EmersonLeiGame& g) { return g.objective.text(g.colors); })
      .def("node_colors",
           [](const EmersonLeiGame& g, Node v) {
             std::vector<std::string> out;
             for (std::size_t c = 0; c < g.colors.size(); ++c)
               if ((g.coloring[v] >> c) & 1) out.push_back(g.colors[c]);
             return out;
           })
      .def("__repr__", [](const EmersonLeiGame& g) {
        return "<EmersonLeiGame with " + std::to_string(g.node_count()) +
               " nodes, " + std::to_string(g.colors.size()) + " colors>";
      });

  m.def("parse_parity",
        [](const std::string& text) { return load_parity_game(text).game; },
        py::arg("text"),
        "Parse, validate and normalize a parity game in pg format.");
  m.def("write_parity",
        [](const ParityGame& g) { return write_parity_game(g); }, py::arg("game"));
  m.def("parse_el", [](const std::string& text) { return load_el_game(text).game; },
        py::arg("text"), "Parse and validate an Emerson-Lei game in elgame format.");
  m.def("write_el", [](const EmersonLeiGame& g) { return write_el_game(g); },
        py::arg("game"));

  m.def("solve", &solve_parity_py, py::arg("game"), py::arg("engine") = "baseline",
        "Solve a parity game; engine is baseline, accel or zielonka. Returns a\n"
        "dict with per-node winners (0 = exists, 1 = forall) and counters.");

  m.def(
      "solve_el",
      [](const EmersonLeiGame& el, std::size_t budget) {
        ElSolveResult r = solve_el(el, budget);
        py::dict out;
        out["winners"] = winners_to_ints(r.winners);
        out["product_nodes"] = r.product_nodes;
        return out;
      },
      py::arg("game"), py::arg("budget") = std::size_t{1'000'000},
      "Solve an Emerson-Lei game through the record product.");

  m.def(
      "el_oracle",
      [](const EmersonLeiGame& el, Node v) { return static_cast<int>(el_oracle(el, v)); },
      py::arg("game"), py::arg("node"),
      "Brute-force winner at one node (exponential; small games only).");

  m.def(
      "detect_dag",
      [](const ParityGame& g) {
        DagDecomposition dag = detect_positional_dag(g);
        py::dict out;
        out["dag_nodes"] = dag.dag_nodes.to_vector();
        out["real_nodes"] = dag.real_ids;
        out["demoted"] = dag.demoted;
        return out;
      },
      py::arg("game"), "Detected positional DAG decomposition of a parity game.");

  m.def(
      "build_product",
      [](const EmersonLeiGame& el, std::size_t budget) {
        std::vector<Node> all(el.node_count());
        for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<Node>(v);
        ProductGame product = build_product(el, all, budget);
        py::dict out;
        out["game"] = product.parity;
        py::list nodes;
        for (Node id = 0; id < product.node_count(); ++id) {
          const Permutation& perm = product.perms[product.perm_id[id]];
          py::list order;
          for (int i = 1; i <= perm.size(); ++i) order.append(el.colors[perm.at(i)]);
          nodes.append(py::make_tuple(product.orig_node[id], order));
        }
        out["nodes"] = nodes;
        out["initials"] = product.initial_product;
        return out;
      },
      py::arg("game"), py::arg("budget") = std::size_t{1'000'000},
      "Record product of an Emerson-Lei game as a parity game plus the\n"
      "product-node map and the product id of (v, initial permutation) per node.");

  m.def(
      "generate",
      [](const std::string& family, std::uint64_t seed, const py::kwargs& kwargs) {
        AnyGame game = generate_game(family, params_from_kwargs(kwargs), seed);
        if (std::holds_alternative<ParityGame>(game))
          return py::cast(std::get<ParityGame>(game));
        return py::cast(std::get<EmersonLeiGame>(game));
      },
      py::arg("family"), py::arg("seed") = 1,
      "Seeded game generator: random-parity(n, out_degree, k), dag-chain(m,\n"
      "depth, width, k) or random-el(n, out_degree, colors).");
}
