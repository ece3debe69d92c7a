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

#include <doctest.h>

#include <string>

#include "pgdag/el_game.hpp"
#include "pgdag/generate.hpp"
#include "pgdag/lar.hpp"
#include "test_util.hpp"

using namespace pgdag;
using namespace pgdag::testutil;

namespace {

bool mentions(const std::vector<std::string>& report, const std::string& needle) {
  for (const auto& line : report)
    if (line.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("validate_arena") {
  SUBCASE("self-loop node is fine") {
    Arena a({Player::Exists}, {{0}});
    CHECK(validate_arena(a).empty());
  }
  SUBCASE("dead end is reported") {
    Arena a({Player::Exists}, {{}});
    auto report = validate_arena(a);
    REQUIRE(report.size() == 1);
    CHECK(report[0] == "node 0 has no successor");
  }
  SUBCASE("successor out of range is reported") {
    Arena a({Player::Exists, Player::Forall}, {{5}, {0}});
    CHECK(mentions(validate_arena(a), "successor 5 out of range"));
  }
  SUBCASE("predecessors are the transpose of successors") {
    Arena a({Player::Exists, Player::Forall, Player::Exists}, {{1, 2}, {2}, {0}});
    std::size_t edges = 0;
    for (Node v = 0; v < 3; ++v)
      for (Node w : a.successors(v)) {
        auto preds = a.predecessors(w);
        CHECK(std::count(preds.begin(), preds.end(), v) ==
              std::count(a.successors(v).begin(), a.successors(v).end(), w));
        ++edges;
      }
    std::size_t pred_edges = 0;
    for (Node v = 0; v < 3; ++v) pred_edges += a.predecessors(v).size();
    CHECK(edges == pred_edges);
  }
}

TEST_CASE("generated games always validate cleanly") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    CHECK(validate_parity_game(generate_random_parity(15, 3, 5, seed)).empty());
    CHECK(validate_parity_game(generate_dag_chain(3, 4, 2, 2, seed)).empty());
    CHECK(validate_el_game(generate_random_el(8, 2, 2, seed)).empty());
  }
}

TEST_CASE("normalize_priorities") {
  SUBCASE("zero forces a +2 shift") {
    ParityGame g = make_game({0, 1, 2}, {Player::Exists, Player::Exists, Player::Exists},
                             {{1}, {2}, {0}});
    ParityGame n = normalize_priorities(g);
    CHECK(n.priority == std::vector<int>{2, 3, 4});
    CHECK(n.levels() == 4);
  }
  SUBCASE("already normalized games are unchanged") {
    ParityGame g = make_game({1, 2}, {Player::Exists, Player::Forall}, {{1}, {0}});
    ParityGame n = normalize_priorities(g);
    CHECK(n.priority == g.priority);
    CHECK(n.levels() == 2);
  }
  SUBCASE("odd maximum pads the level count, not the values") {
    ParityGame g = make_game({1, 2, 3}, {Player::Exists, Player::Exists, Player::Exists},
                             {{1}, {2}, {0}});
    ParityGame n = normalize_priorities(g);
    CHECK(n.priority == std::vector<int>{1, 2, 3});
    CHECK(n.levels() == 4);
  }
}

TEST_CASE("normalization preserves winners (zero-tolerant oracle on both sides)") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    ParityGame raw = generate_random_parity(2 + seed % 19, 3, 4, seed);
    // Inject priority 0 into half the instances.
    if (seed % 2 == 0)
      for (std::size_t v = 0; v < raw.priority.size(); v += 3) raw.priority[v] = 0;
    ParityGame normalized = normalize_priorities(raw);
    CHECK(solve_zielonka(raw).winners == solve_zielonka(normalized).winners);
  }
}

TEST_CASE("priority classes partition the nodes") {
  ParityGame g = generate_random_parity(12, 3, 5, 7);
  auto classes = g.priority_classes();
  NodeSet all(12);
  std::size_t total = 0;
  for (int i = 1; i < static_cast<int>(classes.size()); ++i) {
    CHECK(!classes[i].intersects(all));
    all |= classes[i];
    total += classes[i].count();
  }
  CHECK(total == 12);
  CHECK(all == NodeSet::full(12));
}

TEST_CASE("parity_to_el encodes priorities as singleton color sets") {
  SUBCASE("even self-loop is won by Exists through the pipeline") {
    ParityGame g = loop_game(2, Player::Exists);
    EmersonLeiGame el = parity_to_el(g);
    REQUIRE(el.colors == std::vector<std::string>{"p1", "p2"});
    CHECK(el.coloring[0] == (ColorSet{1} << 1));
    CHECK(solve_el(el).winners[0] == Player::Exists);
  }
  SUBCASE("odd self-loop is won by Forall") {
    ParityGame g = loop_game(1, Player::Exists);
    EmersonLeiGame el = parity_to_el(g);
    CHECK(el.coloring[0] == ColorSet{1});
    CHECK(solve_el(el).winners[0] == Player::Forall);
  }
  SUBCASE("random games: pipeline wins equal direct parity wins") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      ParityGame g = generate_random_parity(6, 2, 4, seed);
      CHECK(solve_el(parity_to_el(g)).winners == solve_zielonka(g).winners);
    }
  }
}
