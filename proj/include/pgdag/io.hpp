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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgdag/el_game.hpp"
#include "pgdag/errors.hpp"
#include "pgdag/parity_game.hpp"

namespace pgdag {

// Parity game text format:
//
//   parity <max-id>;
//   <id> <priority> <owner> <succ>(,<succ>)* ("name")? ;
//
// with owner 0 = Exists (even player) and 1 = Forall. Every id in
// 0..max-id must be declared exactly once.
struct ParityFileNode {
  Node id = 0;
  int priority = 0;
  int owner = 0;
  std::vector<Node> successors;
  std::optional<std::string> name;

  bool operator==(const ParityFileNode&) const = default;
};

struct ParityFileModel {
  Node max_id = 0;
  std::vector<ParityFileNode> nodes;  // file order

  bool operator==(const ParityFileModel&) const = default;
};

// Emerson-Lei game text format:
//
//   elgame <max-id>;
//   colors c(,c)*;
//   objective <formula>;
//   <id> <owner> <colorset|-> <succ>(,<succ>)* ("name")? ;
//
// where a colorset is a comma-separated list of declared color names
// and "-" denotes the empty set. Formulas combine Inf(c), Fin(c), !,
// &, | and parentheses with precedence ! > & > |.
struct ElFileNode {
  Node id = 0;
  int owner = 0;
  std::vector<std::string> colors;
  std::vector<Node> successors;
  std::optional<std::string> name;

  bool operator==(const ElFileNode&) const = default;
};

struct ElFileModel {
  Node max_id = 0;
  std::vector<std::string> colors;
  ObjectiveFormula objective;  // over declared color indices
  std::vector<ElFileNode> nodes;

  bool operator==(const ElFileModel&) const = default;
};

/// Throws ParseError for malformed text. Unknown color names in
/// formulas or node color sets raise ValidationError.
ParityFileModel parse_parity_model(std::string_view text);
ElFileModel parse_el_model(std::string_view text);

/// Canonical form: ascending ids, single spaces, comma-joined lists.
std::string write_parity_model(const ParityFileModel& model);
std::string write_el_model(const ElFileModel& model);

struct LoadedParityGame {
  ParityGame game;                     // validated and normalized
  std::vector<int> original_priority;  // as declared, for display
  ParityFileModel model;
};

struct LoadedElGame {
  EmersonLeiGame game;  // validated
  ElFileModel model;
};

/// Parse + validate + normalize. Structural violations (dead ends, bad
/// indices, duplicate or missing ids) raise ValidationError; nothing is
/// repaired silently.
LoadedParityGame load_parity_game(std::string_view text);
LoadedElGame load_el_game(std::string_view text);

ParityFileModel parity_model_from_game(const ParityGame& game,
                                       const std::vector<int>* display_priority = nullptr);
ElFileModel el_model_from_game(const EmersonLeiGame& game);

std::string write_parity_game(const ParityGame& game,
                              const std::vector<int>* display_priority = nullptr);
std::string write_el_game(const EmersonLeiGame& game);

enum class GameFormat { Parity, EmersonLei };

/// Decides the format from the leading keyword (parity / elgame).
GameFormat sniff_format(std::string_view text);

/// Formula text in canonical form, and a standalone parser for it.
std::string objective_text(const ObjectiveFormula& objective,
                           const std::vector<std::string>& colors);
ObjectiveFormula parse_objective(std::string_view text,
                                 const std::vector<std::string>& colors);

}  // namespace pgdag
