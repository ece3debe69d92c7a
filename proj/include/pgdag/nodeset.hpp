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

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pgdag {

using Node = std::uint32_t;

/// Fixed-width bit vector over a dense node domain 0..n-1.
/// All binary operations require both operands to share the same domain.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::size_t domain)
      : domain_(domain), words_((domain + 63) / 64, 0) {}

  static NodeSet full(std::size_t domain) {
    NodeSet s(domain);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t domain_size() const { return domain_; }

  bool test(Node i) const {
    assert(i < domain_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  void set(Node i) {
    assert(i < domain_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(Node i) {
    assert(i < domain_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  NodeSet& operator|=(const NodeSet& o) {
    assert(domain_ == o.domain_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  NodeSet& operator&=(const NodeSet& o) {
    assert(domain_ == o.domain_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  NodeSet& operator-=(const NodeSet& o) {
    assert(domain_ == o.domain_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
  friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }
  friend NodeSet operator-(NodeSet a, const NodeSet& b) { return a -= b; }

  NodeSet complement() const {
    NodeSet s(domain_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  bool operator==(const NodeSet& o) const = default;

  bool is_subset_of(const NodeSet& o) const {
    assert(domain_ == o.domain_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const NodeSet& o) const {
    assert(domain_ == o.domain_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  /// Visits set members in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        unsigned b = static_cast<unsigned>(std::countr_zero(w));
        f(static_cast<Node>(wi * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<Node> to_vector() const {
    std::vector<Node> out;
    out.reserve(count());
    for_each([&](Node v) { out.push_back(v); });
    return out;
  }

 private:
  void trim() {
    if (domain_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (domain_ % 64)) - 1;
  }

  std::size_t domain_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace pgdag
