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

#include "pgdag/el_game.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgdag {

ObjectiveFormula ObjectiveFormula::inf(int color) {
  ObjectiveFormula f;
  f.pool_.push_back({Op::Inf, -1, -1, color});
  f.root_ = 0;
  return f;
}

ObjectiveFormula ObjectiveFormula::fin(int color) { return negate(inf(color)); }

ObjectiveFormula ObjectiveFormula::negate(ObjectiveFormula f) {
  int child = f.root_;
  f.pool_.push_back({Op::Not, child, -1, -1});
  f.root_ = static_cast<int>(f.pool_.size()) - 1;
  return f;
}

int ObjectiveFormula::append(const ObjectiveFormula& other) {
  const int offset = static_cast<int>(pool_.size());
  for (FNode n : other.pool_) {
    if (n.lhs >= 0) n.lhs += offset;
    if (n.rhs >= 0) n.rhs += offset;
    pool_.push_back(n);
  }
  return other.root_ + offset;
}

ObjectiveFormula ObjectiveFormula::conj(ObjectiveFormula a, ObjectiveFormula b) {
  int rhs = a.append(b);
  a.pool_.push_back({Op::And, a.root_, rhs, -1});
  a.root_ = static_cast<int>(a.pool_.size()) - 1;
  return a;
}

ObjectiveFormula ObjectiveFormula::disj(ObjectiveFormula a, ObjectiveFormula b) {
  int rhs = a.append(b);
  a.pool_.push_back({Op::Or, a.root_, rhs, -1});
  a.root_ = static_cast<int>(a.pool_.size()) - 1;
  return a;
}

bool ObjectiveFormula::eval_node(int idx, ColorSet recurring) const {
  const FNode& n = pool_[idx];
  switch (n.op) {
    case Op::Inf:
      return (recurring >> n.color) & 1;
    case Op::Not:
      return !eval_node(n.lhs, recurring);
    case Op::And:
      return eval_node(n.lhs, recurring) && eval_node(n.rhs, recurring);
    case Op::Or:
      return eval_node(n.lhs, recurring) || eval_node(n.rhs, recurring);
  }
  return false;
}

bool ObjectiveFormula::evaluate(ColorSet recurring) const {
  if (root_ < 0) throw std::logic_error("empty objective formula");
  return eval_node(root_, recurring);
}

ColorSet ObjectiveFormula::mentioned() const {
  ColorSet out = 0;
  for (const FNode& n : pool_)
    if (n.op == Op::Inf) out |= ColorSet{1} << n.color;
  return out;
}

// Precedence: ! binds tighter than &, & tighter than |.
void ObjectiveFormula::text_node(int idx, const std::vector<std::string>& names,
                                 int parent_prec, std::string& out) const {
  const FNode& n = pool_[idx];
  auto name = [&](int c) {
    return c >= 0 && c < static_cast<int>(names.size()) ? names[c]
                                                        : "#" + std::to_string(c);
  };
  switch (n.op) {
    case Op::Inf:
      out += "Inf(" + name(n.color) + ")";
      return;
    case Op::Not:
      if (pool_[n.lhs].op == Op::Inf) {
        out += "Fin(" + name(pool_[n.lhs].color) + ")";
      } else {
        out += "!";
        if (pool_[n.lhs].op == Op::And || pool_[n.lhs].op == Op::Or) {
          out += "(";
          text_node(n.lhs, names, 0, out);
          out += ")";
        } else {
          text_node(n.lhs, names, 3, out);
        }
      }
      return;
    case Op::And: {
      bool parens = parent_prec > 2;
      if (parens) out += "(";
      text_node(n.lhs, names, 2, out);
      out += " & ";
      text_node(n.rhs, names, 2, out);
      if (parens) out += ")";
      return;
    }
    case Op::Or: {
      bool parens = parent_prec > 1;
      if (parens) out += "(";
      text_node(n.lhs, names, 1, out);
      out += " | ";
      text_node(n.rhs, names, 1, out);
      if (parens) out += ")";
      return;
    }
  }
}

std::string ObjectiveFormula::text(const std::vector<std::string>& color_names) const {
  std::string out;
  if (root_ >= 0) text_node(root_, color_names, 0, out);
  return out;
}

bool ObjectiveFormula::equal_nodes(int a, const ObjectiveFormula& other, int b) const {
  const FNode& na = pool_[a];
  const FNode& nb = other.pool_[b];
  if (na.op != nb.op) return false;
  switch (na.op) {
    case Op::Inf:
      return na.color == nb.color;
    case Op::Not:
      return equal_nodes(na.lhs, other, nb.lhs);
    case Op::And:
    case Op::Or:
      return equal_nodes(na.lhs, other, nb.lhs) &&
             equal_nodes(na.rhs, other, nb.rhs);
  }
  return false;
}

bool ObjectiveFormula::operator==(const ObjectiveFormula& other) const {
  if (root_ < 0 || other.root_ < 0) return root_ == other.root_;
  return equal_nodes(root_, other, other.root_);
}

int EmersonLeiGame::color_index(const std::string& name) const {
  auto it = std::find(colors.begin(), colors.end(), name);
  return it == colors.end() ? -1 : static_cast<int>(it - colors.begin());
}

std::vector<std::string> validate_el_game(const EmersonLeiGame& game) {
  std::vector<std::string> issues = validate_arena(game.arena);
  if (game.coloring.size() != game.node_count())
    issues.push_back("coloring does not cover all nodes");

  const ColorSet declared =
      game.colors.size() >= kMaxColors
          ? ~ColorSet{0}
          : (ColorSet{1} << game.colors.size()) - 1;
  for (std::size_t v = 0; v < game.coloring.size(); ++v)
    if (game.coloring[v] & ~declared)
      issues.push_back("node " + std::to_string(v) + ": undeclared color bits");
  if (game.objective.mentioned() & ~declared)
    issues.push_back("objective mentions undeclared colors");
  if (game.colors.size() > kMaxColors)
    issues.push_back("too many colors (limit " + std::to_string(kMaxColors) + ")");
  return issues;
}

EmersonLeiGame parity_to_el(const ParityGame& game) {
  if (!is_normalized(game))
    throw std::invalid_argument("parity_to_el requires a normalized game");
  const int k = game.levels();
  if (k > kMaxColors)
    throw std::invalid_argument("parity_to_el: too many priorities for colors");

  EmersonLeiGame el;
  el.arena = game.arena;
  for (int i = 1; i <= k; ++i) el.colors.push_back("p" + std::to_string(i));
  el.coloring.resize(game.node_count());
  for (std::size_t v = 0; v < game.node_count(); ++v)
    el.coloring[v] = ColorSet{1} << (game.priority[v] - 1);

  // Some even priority recurs and nothing above it does.
  bool first = true;
  ObjectiveFormula objective = ObjectiveFormula::inf(0);
  for (int i = 2; i <= k; i += 2) {
    ObjectiveFormula clause = ObjectiveFormula::inf(i - 1);
    for (int j = i + 1; j <= k; ++j)
      clause = ObjectiveFormula::conj(clause, ObjectiveFormula::fin(j - 1));
    if (first) {
      objective = clause;
      first = false;
    } else {
      objective = ObjectiveFormula::disj(objective, clause);
    }
  }
  el.objective = objective;
  return el;
}

}  // namespace pgdag
