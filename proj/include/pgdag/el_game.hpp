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
#include <string>
#include <vector>

#include "pgdag/arena.hpp"
#include "pgdag/parity_game.hpp"

namespace pgdag {

/// Colors are indexed by their declaration order; a set of colors is a
/// bitmask over those indices. At most 32 colors (factorial memory
/// blowup makes larger alphabets pointless anyway).
using ColorSet = std::uint32_t;

constexpr int kMaxColors = 32;

/// Boolean objective over "color occurs infinitely often" atoms.
/// Fin(c) is sugar for !Inf(c). Immutable value type; nodes live in a
/// small pool.
class ObjectiveFormula {
 public:
  enum class Op : std::uint8_t { Inf, Not, And, Or };

  static ObjectiveFormula inf(int color);
  static ObjectiveFormula fin(int color);
  static ObjectiveFormula negate(ObjectiveFormula f);
  static ObjectiveFormula conj(ObjectiveFormula a, ObjectiveFormula b);
  static ObjectiveFormula disj(ObjectiveFormula a, ObjectiveFormula b);

  /// Evaluates with Inf(c) == (c in recurring). Total for any input.
  bool evaluate(ColorSet recurring) const;

  /// All colors mentioned anywhere in the formula.
  ColorSet mentioned() const;

  /// Canonical text using the given color names; !Inf(c) prints as
  /// Fin(c).
  std::string text(const std::vector<std::string>& color_names) const;

  bool operator==(const ObjectiveFormula& other) const;

 private:
  struct FNode {
    Op op;
    int lhs = -1;
    int rhs = -1;
    int color = -1;
  };
  std::vector<FNode> pool_;
  int root_ = -1;

  int append(const ObjectiveFormula& other);
  bool eval_node(int idx, ColorSet recurring) const;
  void text_node(int idx, const std::vector<std::string>& names, int parent_prec,
                 std::string& out) const;
  bool equal_nodes(int a, const ObjectiveFormula& other, int b) const;
};

inline bool formula_eval(const ObjectiveFormula& objective, ColorSet recurring) {
  return objective.evaluate(recurring);
}

struct EmersonLeiGame {
  Arena arena;
  std::vector<std::string> colors;  // declaration order fixes indices
  std::vector<ColorSet> coloring;   // per node
  ObjectiveFormula objective;

  std::size_t node_count() const { return arena.node_count(); }
  int color_index(const std::string& name) const;  // -1 when unknown
};

/// Arena violations plus color-range violations (coloring bits and
/// objective atoms must refer to declared colors).
std::vector<std::string> validate_el_game(const EmersonLeiGame& game);

/// Encodes a normalized parity game as the equivalent Emerson-Lei game:
/// one color per priority, node v colored with its priority's color,
/// and the objective "some even priority recurs while no higher one
/// does".
EmersonLeiGame parity_to_el(const ParityGame& game);

}  // namespace pgdag
