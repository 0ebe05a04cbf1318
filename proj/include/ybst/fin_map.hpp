#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ybst/errors.hpp"

namespace ybst {

// Total self-map of {0, ..., n-1} stored as a dense table.
class FinMap {
 public:
  FinMap() = default;

  FinMap(int n, std::vector<int> table) : n_(n), tab_(std::move(table)) {
    if (n_ < 0 || static_cast<int>(tab_.size()) != n_)
      throw input_error("FinMap: table size does not match carrier size");
    for (int v : tab_)
      if (v < 0 || v >= n_)
        throw input_error("FinMap: entry " + std::to_string(v) + " out of range [0," +
                          std::to_string(n_) + ")");
  }

  static FinMap identity(int n) {
    std::vector<int> t(n);
    for (int i = 0; i < n; ++i) t[i] = i;
    return FinMap(n, std::move(t));
  }

  static FinMap constant(int n, int value) {
    return FinMap(n, std::vector<int>(n, value));
  }

  int size() const { return n_; }
  int operator()(int x) const { return tab_[x]; }
  const std::vector<int>& table() const { return tab_; }

  bool is_identity() const {
    for (int i = 0; i < n_; ++i)
      if (tab_[i] != i) return false;
    return true;
  }

  bool is_permutation() const {
    std::vector<char> seen(n_, 0);
    for (int v : tab_) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }

  bool is_idempotent() const {
    for (int i = 0; i < n_; ++i)
      if (tab_[tab_[i]] != tab_[i]) return false;
    return true;
  }

  // f.after(g) is the composite x -> f(g(x)).
  FinMap after(const FinMap& g) const {
    if (g.n_ != n_) throw input_error("FinMap: composing maps of different carriers");
    std::vector<int> t(n_);
    for (int i = 0; i < n_; ++i) t[i] = tab_[g.tab_[i]];
    return FinMap(n_, std::move(t));
  }

  FinMap power(int k) const {
    FinMap acc = identity(n_);
    for (int i = 0; i < k; ++i) acc = after(acc);
    return acc;
  }

  friend bool operator==(const FinMap& a, const FinMap& b) {
    return a.n_ == b.n_ && a.tab_ == b.tab_;
  }
  friend std::strong_ordering operator<=>(const FinMap& a, const FinMap& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.tab_ <=> b.tab_;
  }

 private:
  int n_ = 0;
  std::vector<int> tab_;
};

inline FinMap compose(const FinMap& f, const FinMap& g) { return f.after(g); }

// A bijective FinMap. Construction validates the bijection.
class Perm : public FinMap {
 public:
  Perm() = default;

  explicit Perm(FinMap m) : FinMap(std::move(m)) {
    if (!is_permutation()) throw input_error("Perm: table is not a bijection");
  }

  Perm(int n, std::vector<int> table) : Perm(FinMap(n, std::move(table))) {}

  static Perm identity(int n) { return Perm(FinMap::identity(n)); }

  Perm inverse() const {
    std::vector<int> t(size());
    for (int i = 0; i < size(); ++i) t[(*this)(i)] = i;
    return Perm(size(), std::move(t));
  }
};

struct FinMapHash {
  std::size_t operator()(const FinMap& m) const {
    std::size_t h = std::hash<int>()(m.size());
    for (int v : m.table()) h = h * 1000003u + static_cast<std::size_t>(v);
    return h;
  }
};

}  // namespace ybst
