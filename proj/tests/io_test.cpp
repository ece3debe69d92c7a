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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pgdag/generate.hpp"
#include "pgdag/io.hpp"
#include "pgdag/lar.hpp"
#include "test_util.hpp"

using namespace pgdag;
using namespace pgdag::testutil;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::filesystem::path kDataDir{PGDAG_TEST_DATA_DIR};

}  // namespace

TEST_CASE("parsing the two-node cycle and solving it") {
  LoadedParityGame loaded = load_parity_game("parity 1; 0 2 0 1; 1 1 1 0;");
  CHECK(loaded.game.node_count() == 2);
  CHECK(loaded.game.arena.owner(0) == Player::Exists);
  CHECK(loaded.game.priority == std::vector<int>{2, 1});
  WinnerMap winners = solve_zielonka(loaded.game).winners;
  CHECK(winners == WinnerMap{Player::Exists, Player::Exists});
}

TEST_CASE("golden corpus: write after parse is the canonical form") {
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kDataDir / "golden")) {
    const auto path = entry.path();
    if (path.extension() != ".in") continue;
    ++seen;
    std::string input = slurp(path);
    auto golden_path = path;
    golden_path.replace_extension(".golden");
    std::string golden = slurp(golden_path);

    std::string name = path.stem().string();  // e.g. g01.pg
    if (name.ends_with(".pg")) {
      CHECK(write_parity_model(parse_parity_model(input)) == golden);
      CHECK(write_parity_model(parse_parity_model(golden)) == golden);
    } else {
      CHECK(write_el_model(parse_el_model(input)) == golden);
      CHECK(write_el_model(parse_el_model(golden)) == golden);
    }
  }
  CHECK(seen == 10);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_parity_model("parity 1;\n0 2 0 1;\n1 1 1 ?;\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }

  CHECK_THROWS_AS(parse_parity_model("nothing here"), ParseError);
  CHECK_THROWS_AS(parse_parity_model("parity 0;\n0 1 5 0;"), ParseError);
}

TEST_CASE("structural violations are rejected, not repaired") {
  // Dead end.
  CHECK_THROWS_WITH_AS(load_parity_game("parity 0; 0 1 0 ;"),
                       doctest::Contains("node 0 has no successor"),
                       ValidationError);
  // Successor out of range.
  CHECK_THROWS_AS(load_parity_game("parity 1; 0 1 0 5; 1 1 1 0;"), ValidationError);
  // Duplicate and missing declarations.
  CHECK_THROWS_AS(load_parity_game("parity 1; 0 1 0 1; 0 1 0 1; 1 1 1 0;"),
                  ValidationError);
  CHECK_THROWS_AS(load_parity_game("parity 2; 0 1 0 1; 1 1 1 0;"), ValidationError);
}

TEST_CASE("loading normalizes while keeping the declared priorities") {
  LoadedParityGame loaded = load_parity_game("parity 1; 0 0 0 1; 1 1 1 0;");
  CHECK(loaded.original_priority == std::vector<int>{0, 1});
  CHECK(loaded.game.priority == std::vector<int>{2, 3});
  CHECK(write_parity_game(loaded.game, &loaded.original_priority) ==
        "parity 1;\n0 0 0 1;\n1 1 1 0;\n");
}

TEST_CASE("elgame grammar") {
  SUBCASE("basic game loads and solves") {
    LoadedElGame loaded = load_el_game("elgame 0; colors a; objective Inf(a); 0 0 a 0;");
    CHECK(solve_el(loaded.game).winners[0] == Player::Exists);
  }
  SUBCASE("precedence: and binds tighter than or") {
    std::vector<std::string> colors{"a", "b", "c"};
    ObjectiveFormula parsed = parse_objective("Inf(a) & Fin(b) | Inf(c)", colors);
    ObjectiveFormula expected = ObjectiveFormula::disj(
        ObjectiveFormula::conj(ObjectiveFormula::inf(0), ObjectiveFormula::fin(1)),
        ObjectiveFormula::inf(2));
    CHECK(parsed == expected);
  }
  SUBCASE("unknown color in the objective names the culprit") {
    CHECK_THROWS_WITH_AS(
        load_el_game("elgame 0; colors a,b; objective Inf(z); 0 0 a 0;"),
        doctest::Contains("unknown color 'z'"), ValidationError);
  }
  SUBCASE("unknown color on a node") {
    CHECK_THROWS_AS(load_el_game("elgame 0; colors a; objective Inf(a); 0 0 q 0;"),
                    ValidationError);
  }
}

TEST_CASE("format sniffing") {
  CHECK(sniff_format("parity 0; 0 1 0 0;") == GameFormat::Parity);
  CHECK(sniff_format("  \n elgame 0; colors a; objective Inf(a); 0 0 a 0;") ==
        GameFormat::EmersonLei);
  CHECK_THROWS_AS(sniff_format("neither"), ParseError);
}

TEST_CASE("model round-trips on generated games") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    ParityGame g = generate_random_parity(2 + seed % 18, 3, 1 + seed % 6, seed);
    ParityFileModel model = parity_model_from_game(g);
    ParityFileModel reparsed = parse_parity_model(write_parity_model(model));
    CHECK(reparsed == model);
    CHECK(write_parity_model(reparsed) == write_parity_model(model));
  }
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    EmersonLeiGame el = generate_random_el(2 + seed % 8, 2, 1 + seed % 3, seed);
    ElFileModel model = el_model_from_game(el);
    ElFileModel reparsed = parse_el_model(write_el_model(model));
    CHECK(reparsed == model);
    CHECK(write_el_model(reparsed) == write_el_model(model));
  }
}

TEST_CASE("reduction through the text format preserves winners at mapped nodes") {
  // Writing the record product as a parity game and re-loading it must
  // give the same winners at every (v, initial permutation) node.
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    EmersonLeiGame el = generate_random_el(4, 2, 2, seed * 5);
    std::vector<Node> all{0, 1, 2, 3};
    ProductGame product = build_product(el, all);

    LoadedParityGame reloaded = load_parity_game(write_parity_game(product.parity));
    WinnerMap product_winners = solve_zielonka(reloaded.game).winners;
    ElSolveResult direct = solve_el(el);
    for (Node v = 0; v < el.node_count(); ++v)
      CHECK(product_winners[product.initial_product[v]] == direct.winners[v]);
  }
}
