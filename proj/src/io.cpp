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

#include "pgdag/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace pgdag {

namespace {

struct Token {
  enum class Kind { Ident, Number, Punct, String, End };
  Kind kind = Kind::End;
  std::string text;
  long long number = 0;
  int line = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(current_.line, msg + where());
  }

  Token expect_punct(char c) {
    if (current_.kind != Token::Kind::Punct || current_.text[0] != c)
      fail(std::string("expected '") + c + "'");
    return take();
  }

  Token expect_ident(const char* what) {
    if (current_.kind != Token::Kind::Ident) fail(std::string("expected ") + what);
    return take();
  }

  Token expect_number(const char* what) {
    if (current_.kind != Token::Kind::Number) fail(std::string("expected ") + what);
    return take();
  }

  bool at_punct(char c) const {
    return current_.kind == Token::Kind::Punct && current_.text[0] == c;
  }

 private:
  std::string where() const {
    if (current_.kind == Token::Kind::End) return " (at end of input)";
    return " (got '" + current_.text + "')";
  }

  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
    current_ = Token{};
    current_.line = line_;
    if (pos_ >= text_.size()) return;

    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      current_.kind = Token::Kind::Number;
      current_.text = std::string(text_.substr(start, pos_ - start));
      current_.number = std::stoll(current_.text);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      current_.kind = Token::Kind::Ident;
      current_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    if (c == '"') {
      std::size_t end = text_.find('"', pos_ + 1);
      if (end == std::string_view::npos)
        throw ParseError(line_, "unterminated string");
      current_.kind = Token::Kind::String;
      current_.text = std::string(text_.substr(pos_ + 1, end - pos_ - 1));
      pos_ = end + 1;
      return;
    }
    static const std::string punct = ";,()&|!-";
    if (punct.find(c) != std::string::npos) {
      current_.kind = Token::Kind::Punct;
      current_.text = std::string(1, c);
      ++pos_;
      return;
    }
    throw ParseError(line_, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  Token current_;
};

Node expect_node_id(Lexer& lex) {
  Token t = lex.expect_number("node id");
  return static_cast<Node>(t.number);
}

std::vector<Node> parse_successor_list(Lexer& lex) {
  std::vector<Node> succ;
  while (lex.peek().kind == Token::Kind::Number) {
    succ.push_back(expect_node_id(lex));
    if (lex.at_punct(',')) {
      lex.take();
      if (lex.peek().kind != Token::Kind::Number) lex.fail("expected successor id");
    } else {
      break;
    }
  }
  return succ;
}

std::optional<std::string> parse_optional_name(Lexer& lex) {
  if (lex.peek().kind == Token::Kind::String) return lex.take().text;
  return std::nullopt;
}

int parse_owner(Lexer& lex) {
  Token t = lex.expect_number("owner (0 or 1)");
  if (t.number != 0 && t.number != 1)
    throw ParseError(t.line, "owner must be 0 or 1");
  return static_cast<int>(t.number);
}

// --- objective formulas ------------------------------------------------

class FormulaParser {
 public:
  FormulaParser(Lexer& lex, const std::vector<std::string>& colors)
      : lex_(lex), colors_(colors) {}

  ObjectiveFormula parse() { return parse_or(); }

 private:
  int color_index(const std::string& name, int line) const {
    auto it = std::find(colors_.begin(), colors_.end(), name);
    if (it == colors_.end())
      throw ValidationError({"unknown color '" + name + "' (line " +
                             std::to_string(line) + ")"});
    return static_cast<int>(it - colors_.begin());
  }

  ObjectiveFormula parse_or() {
    ObjectiveFormula f = parse_and();
    while (lex_.at_punct('|')) {
      lex_.take();
      f = ObjectiveFormula::disj(std::move(f), parse_and());
    }
    return f;
  }

  ObjectiveFormula parse_and() {
    ObjectiveFormula f = parse_unary();
    while (lex_.at_punct('&')) {
      lex_.take();
      f = ObjectiveFormula::conj(std::move(f), parse_unary());
    }
    return f;
  }

  ObjectiveFormula parse_unary() {
    if (lex_.at_punct('!')) {
      lex_.take();
      return ObjectiveFormula::negate(parse_unary());
    }
    return parse_primary();
  }

  ObjectiveFormula parse_primary() {
    if (lex_.at_punct('(')) {
      lex_.take();
      ObjectiveFormula f = parse_or();
      lex_.expect_punct(')');
      return f;
    }
    Token t = lex_.expect_ident("Inf(...) or Fin(...)");
    if (t.text != "Inf" && t.text != "Fin")
      throw ParseError(t.line, "expected Inf or Fin, got '" + t.text + "'");
    lex_.expect_punct('(');
    Token name = lex_.expect_ident("color name");
    lex_.expect_punct(')');
    int c = color_index(name.text, name.line);
    return t.text == "Inf" ? ObjectiveFormula::inf(c) : ObjectiveFormula::fin(c);
  }

  Lexer& lex_;
  const std::vector<std::string>& colors_;
};

void check_structure(Node max_id, const std::vector<Node>& declared,
                     std::vector<std::string>& issues) {
  std::set<Node> seen;
  for (Node id : declared) {
    if (id > max_id)
      issues.push_back("node " + std::to_string(id) + " exceeds declared maximum " +
                       std::to_string(max_id));
    if (!seen.insert(id).second)
      issues.push_back("node " + std::to_string(id) + " declared twice");
  }
  for (Node id = 0; id <= max_id; ++id)
    if (!seen.count(id))
      issues.push_back("node " + std::to_string(id) + " not declared");
}

}  // namespace

ParityFileModel parse_parity_model(std::string_view text) {
  Lexer lex(text);
  Token head = lex.expect_ident("'parity' header");
  if (head.text != "parity")
    throw ParseError(head.line, "expected 'parity' header, got '" + head.text + "'");
  ParityFileModel model;
  model.max_id = expect_node_id(lex);
  lex.expect_punct(';');

  while (lex.peek().kind != Token::Kind::End) {
    ParityFileNode node;
    node.id = expect_node_id(lex);
    node.priority = static_cast<int>(lex.expect_number("priority").number);
    node.owner = parse_owner(lex);
    node.successors = parse_successor_list(lex);
    node.name = parse_optional_name(lex);
    lex.expect_punct(';');
    model.nodes.push_back(std::move(node));
  }
  return model;
}

ElFileModel parse_el_model(std::string_view text) {
  Lexer lex(text);
  Token head = lex.expect_ident("'elgame' header");
  if (head.text != "elgame")
    throw ParseError(head.line, "expected 'elgame' header, got '" + head.text + "'");
  ElFileModel model;
  model.max_id = expect_node_id(lex);
  lex.expect_punct(';');

  Token kw = lex.expect_ident("'colors'");
  if (kw.text != "colors") throw ParseError(kw.line, "expected 'colors' line");
  for (;;) {
    model.colors.push_back(lex.expect_ident("color name").text);
    if (lex.at_punct(',')) {
      lex.take();
      continue;
    }
    break;
  }
  lex.expect_punct(';');

  kw = lex.expect_ident("'objective'");
  if (kw.text != "objective") throw ParseError(kw.line, "expected 'objective' line");
  model.objective = FormulaParser(lex, model.colors).parse();
  lex.expect_punct(';');

  while (lex.peek().kind != Token::Kind::End) {
    ElFileNode node;
    node.id = expect_node_id(lex);
    node.owner = parse_owner(lex);
    if (lex.at_punct('-')) {
      lex.take();
    } else {
      for (;;) {
        Token name = lex.expect_ident("color name or '-'");
        if (std::find(model.colors.begin(), model.colors.end(), name.text) ==
            model.colors.end())
          throw ValidationError({"unknown color '" + name.text + "' (line " +
                                 std::to_string(name.line) + ")"});
        node.colors.push_back(name.text);
        if (lex.at_punct(',') ) {
          lex.take();
          continue;
        }
        break;
      }
    }
    node.successors = parse_successor_list(lex);
    node.name = parse_optional_name(lex);
    lex.expect_punct(';');
    model.nodes.push_back(std::move(node));
  }
  return model;
}

std::string write_parity_model(const ParityFileModel& model) {
  ParityFileModel sorted = model;
  std::sort(sorted.nodes.begin(), sorted.nodes.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  std::string out = "parity " + std::to_string(sorted.max_id) + ";\n";
  for (const auto& node : sorted.nodes) {
    out += std::to_string(node.id) + " " + std::to_string(node.priority) + " " +
           std::to_string(node.owner) + " ";
    for (std::size_t i = 0; i < node.successors.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(node.successors[i]);
    }
    if (node.name) out += " \"" + *node.name + "\"";
    out += ";\n";
  }
  return out;
}

std::string write_el_model(const ElFileModel& model) {
  ElFileModel sorted = model;
  std::sort(sorted.nodes.begin(), sorted.nodes.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  std::string out = "elgame " + std::to_string(sorted.max_id) + ";\n";
  out += "colors ";
  for (std::size_t i = 0; i < sorted.colors.size(); ++i) {
    if (i) out += ",";
    out += sorted.colors[i];
  }
  out += ";\n";
  out += "objective " + sorted.objective.text(sorted.colors) + ";\n";
  for (const auto& node : sorted.nodes) {
    out += std::to_string(node.id) + " " + std::to_string(node.owner) + " ";
    if (node.colors.empty()) {
      out += "-";
    } else {
      for (std::size_t i = 0; i < node.colors.size(); ++i) {
        if (i) out += ",";
        out += node.colors[i];
      }
    }
    out += " ";
    for (std::size_t i = 0; i < node.successors.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(node.successors[i]);
    }
    if (node.name) out += " \"" + *node.name + "\"";
    out += ";\n";
  }
  return out;
}

LoadedParityGame load_parity_game(std::string_view text) {
  LoadedParityGame loaded;
  loaded.model = parse_parity_model(text);
  const ParityFileModel& model = loaded.model;

  std::vector<std::string> issues;
  std::vector<Node> declared;
  for (const auto& node : model.nodes) declared.push_back(node.id);
  check_structure(model.max_id, declared, issues);
  if (!issues.empty()) throw ValidationError(issues);

  const std::size_t n = static_cast<std::size_t>(model.max_id) + 1;
  std::vector<Player> owners(n, Player::Exists);
  std::vector<std::vector<Node>> succ(n);
  std::vector<int> priorities(n, 0);
  for (const auto& node : model.nodes) {
    owners[node.id] = node.owner == 0 ? Player::Exists : Player::Forall;
    succ[node.id] = node.successors;
    priorities[node.id] = node.priority;
  }

  ParityGame raw{Arena(std::move(owners), succ), priorities};
  issues = validate_parity_game(raw);
  if (!issues.empty()) throw ValidationError(issues);

  loaded.original_priority = priorities;
  loaded.game = normalize_priorities(raw);
  return loaded;
}

LoadedElGame load_el_game(std::string_view text) {
  LoadedElGame loaded;
  loaded.model = parse_el_model(text);
  const ElFileModel& model = loaded.model;

  std::vector<std::string> issues;
  std::vector<Node> declared;
  for (const auto& node : model.nodes) declared.push_back(node.id);
  check_structure(model.max_id, declared, issues);
  {
    std::set<std::string> names(model.colors.begin(), model.colors.end());
    if (names.size() != model.colors.size())
      issues.push_back("duplicate color declaration");
  }
  if (!issues.empty()) throw ValidationError(issues);

  const std::size_t n = static_cast<std::size_t>(model.max_id) + 1;
  std::vector<Player> owners(n, Player::Exists);
  std::vector<std::vector<Node>> succ(n);
  EmersonLeiGame game;
  game.colors = model.colors;
  game.coloring.assign(n, 0);
  game.objective = model.objective;
  for (const auto& node : model.nodes) {
    owners[node.id] = node.owner == 0 ? Player::Exists : Player::Forall;
    succ[node.id] = node.successors;
    for (const auto& cname : node.colors) {
      auto it = std::find(model.colors.begin(), model.colors.end(), cname);
      game.coloring[node.id] |= ColorSet{1} << (it - model.colors.begin());
    }
  }
  game.arena = Arena(std::move(owners), succ);

  issues = validate_el_game(game);
  if (!issues.empty()) throw ValidationError(issues);
  loaded.game = std::move(game);
  return loaded;
}

ParityFileModel parity_model_from_game(const ParityGame& game,
                                       const std::vector<int>* display_priority) {
  ParityFileModel model;
  model.max_id = game.node_count() == 0 ? 0 : static_cast<Node>(game.node_count() - 1);
  for (Node v = 0; v < game.node_count(); ++v) {
    ParityFileNode node;
    node.id = v;
    node.priority = display_priority ? (*display_priority)[v] : game.priority[v];
    node.owner = game.arena.owner(v) == Player::Exists ? 0 : 1;
    auto s = game.arena.successors(v);
    node.successors.assign(s.begin(), s.end());
    model.nodes.push_back(std::move(node));
  }
  return model;
}

ElFileModel el_model_from_game(const EmersonLeiGame& game) {
  ElFileModel model;
  model.max_id = game.node_count() == 0 ? 0 : static_cast<Node>(game.node_count() - 1);
  model.colors = game.colors;
  model.objective = game.objective;
  for (Node v = 0; v < game.node_count(); ++v) {
    ElFileNode node;
    node.id = v;
    node.owner = game.arena.owner(v) == Player::Exists ? 0 : 1;
    for (std::size_t c = 0; c < game.colors.size(); ++c)
      if ((game.coloring[v] >> c) & 1) node.colors.push_back(game.colors[c]);
    auto s = game.arena.successors(v);
    node.successors.assign(s.begin(), s.end());
    model.nodes.push_back(std::move(node));
  }
  return model;
}

std::string write_parity_game(const ParityGame& game,
                              const std::vector<int>* display_priority) {
  return write_parity_model(parity_model_from_game(game, display_priority));
}

std::string write_el_game(const EmersonLeiGame& game) {
  return write_el_model(el_model_from_game(game));
}

GameFormat sniff_format(std::string_view text) {
  Lexer lex(text);
  if (lex.peek().kind == Token::Kind::Ident) {
    if (lex.peek().text == "parity") return GameFormat::Parity;
    if (lex.peek().text == "elgame") return GameFormat::EmersonLei;
  }
  throw ParseError(lex.peek().line, "expected 'parity' or 'elgame' header");
}

std::string objective_text(const ObjectiveFormula& objective,
                           const std::vector<std::string>& colors) {
  return objective.text(colors);
}

ObjectiveFormula parse_objective(std::string_view text,
                                 const std::vector<std::string>& colors) {
  Lexer lex(text);
  ObjectiveFormula f = FormulaParser(lex, colors).parse();
  if (lex.peek().kind != Token::Kind::End)
    throw ParseError(lex.peek().line, "trailing input after formula");
  return f;
}

}  // namespace pgdag
