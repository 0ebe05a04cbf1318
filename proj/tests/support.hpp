#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "ybst/enumerate.hpp"
#include "ybst/matched.hpp"
#include "ybst/monoid.hpp"
#include "ybst/semitruss.hpp"
#include "ybst/solution.hpp"

namespace support {

using ybst::FinMap;
using ybst::Perm;
using ybst::SemiTruss;
using ybst::Solution;
using ybst::Table;
using ybst::Word;

inline Solution make_solution(int n, std::vector<std::vector<int>> lam,
                              std::vector<std::vector<int>> rho) {
  Solution s;
  s.n = n;
  for (auto& row : lam) s.lam.emplace_back(n, std::move(row));
  for (auto& row : rho) s.rho.emplace_back(n, std::move(row));
  return s;
}

// r(x,y) = (y, x)
inline Solution flip(int n) {
  Solution s;
  s.n = n;
  s.lam.assign(n, FinMap::identity(n));
  s.rho.assign(n, FinMap::identity(n));
  return s;
}

// r(x,y) = (y, tau(x)) with tau = (01); bijective non-degenerate, not involutive
inline Solution tau_twist() {
  return make_solution(2, {{0, 1}, {0, 1}}, {{1, 0}, {1, 0}});
}

// r(x,y) = (tau(y), tau(x)); involutive non-degenerate
inline Solution involutive_twist() {
  return make_solution(2, {{1, 0}, {1, 0}}, {{1, 0}, {1, 0}});
}

// lambda = id, rho_0 constant 0, rho_1 = id (0-based relabeling of the paper's
// two-element example with two sigma-maps)
inline Solution candc_prime() {
  return make_solution(2, {{0, 1}, {0, 1}}, {{0, 0}, {0, 1}});
}

// The companion solution with rho'_0 constant 1 instead
inline Solution candc_prime_variant() {
  return make_solution(2, {{0, 1}, {0, 1}}, {{1, 1}, {0, 1}});
}

// r(x,y) = (y, y); left non-degenerate idempotent
inline Solution right_projection(int n) {
  Solution s;
  s.n = n;
  s.lam.assign(n, FinMap::identity(n));
  for (int y = 0; y < n; ++y) s.rho.push_back(FinMap::constant(n, y));
  return s;
}

inline Table cyclic_table(int n) {
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

// S_3 as the lexicographically ordered permutations of {0,1,2} with
// composition table[a][b] = a after b.
inline Table s3_table() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int m = static_cast<int>(perms.size());
  Table t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<int> c(3);
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

inline SemiTruss trivial_brace(const Table& group) {
  return ybst::from_skew_brace(group, group);
}

// The four-element left cancellative YB-semitruss with right-zero addition:
// a+b = b, sigma_b constant b, lambda_0 = lambda_1 = id, lambda_2 = lambda_3 =
// (02)(13), a o b = lambda_a(b).
inline SemiTruss circnotgroup() {
  SemiTruss t;
  t.m = 4;
  t.add.assign(4, {0, 1, 2, 3});
  std::vector<std::vector<int>> lam{{0, 1, 2, 3}, {0, 1, 2, 3}, {2, 3, 0, 1}, {2, 3, 0, 1}};
  t.mul = lam;
  for (auto& row : lam) t.lam.emplace_back(4, row);
  for (int b = 0; b < 4; ++b) t.sig.push_back(FinMap::constant(4, b));
  return t;
}

// The two-element multiplicative monoid {0,1} as a YB-semitruss that is not
// unital: sigma_0(1) = 0.
inline SemiTruss mult_monoid2() {
  SemiTruss t;
  t.m = 2;
  t.add = {{0, 0}, {0, 1}};
  t.mul = t.add;
  t.lam.assign(2, Perm::identity(2));
  t.sig.push_back(FinMap::constant(2, 0));
  t.sig.push_back(FinMap::identity(2));
  t.unit = 1;
  return t;
}

// Right-zero semitruss on k points: a+b = a o b = b, lambda = id, sigma_a
// constant a.
inline SemiTruss right_zero_semitruss(int k) {
  SemiTruss t;
  t.m = k;
  std::vector<int> idrow(k);
  for (int i = 0; i < k; ++i) idrow[i] = i;
  t.add.assign(k, idrow);
  t.mul.assign(k, idrow);
  t.lam.assign(k, Perm::identity(k));
  for (int a = 0; a < k; ++a) t.sig.push_back(FinMap::constant(k, a));
  return t;
}

// Matched system: right-zero semitruss of size k acted on by the trivial
// brace on C_k through cyclic rotations, beta trivial.
inline ybst::MatchedSystemST rotation_system(int k) {
  ybst::MatchedSystemST sys;
  sys.a1 = right_zero_semitruss(k);
  sys.a2 = trivial_brace(cyclic_table(k));
  for (int u = 0; u < k; ++u) {
    std::vector<int> rot(k);
    for (int j = 0; j < k; ++j) rot[j] = (j + u) % k;
    sys.alpha.emplace_back(k, std::move(rot));
  }
  sys.beta.assign(k, Perm::identity(k));
  return sys;
}

// ---- independent oracles ----

// Direct braid check: composes r x id and id x r on triples, no use of the
// three component identities.
inline bool braid_holds(const Solution& s) {
  auto r12 = [&s](std::array<int, 3> t) {
    auto [u, v] = s.apply(t[0], t[1]);
    return std::array<int, 3>{u, v, t[2]};
  };
  auto r23 = [&s](std::array<int, 3> t) {
    auto [u, v] = s.apply(t[1], t[2]);
    return std::array<int, 3>{t[0], u, v};
  };
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b)
      for (int c = 0; c < s.n; ++c) {
        std::array<int, 3> t{a, b, c};
        if (r12(r23(r12(t))) != r23(r12(r23(t)))) return false;
      }
  return true;
}

// All 256 maps X^2 -> X^2 on two points that satisfy the braid relation,
// keyed by the flattened (lambda, rho) tables.
inline std::set<std::vector<int>> brute_solutions_n2() {
  std::set<std::vector<int>> keys;
  // r is determined by the four image pairs r(x,y), each one of 4 values.
  for (int code = 0; code < 256; ++code) {
    int c = code;
    std::vector<std::vector<std::pair<int, int>>> img(2, std::vector<std::pair<int, int>>(2));
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        img[x][y] = {(c % 4) / 2, (c % 4) % 2};
        c /= 4;
      }
    Solution s;
    s.n = 2;
    std::vector<int> l0{img[0][0].first, img[0][1].first};
    std::vector<int> l1{img[1][0].first, img[1][1].first};
    std::vector<int> r0{img[0][0].second, img[1][0].second};
    std::vector<int> r1{img[0][1].second, img[1][1].second};
    s.lam.emplace_back(2, l0);
    s.lam.emplace_back(2, l1);
    s.rho.emplace_back(2, r0);
    s.rho.emplace_back(2, r1);
    if (braid_holds(s)) keys.insert(ybst::solution_key(s));
  }
  return keys;
}

// Naive graded dimensions: explicit words, repeated relabeling sweeps until a
// fixpoint, no union-find.
inline std::vector<long long> naive_dims(const Solution& s, ybst::Flavor flavor, int maxdeg) {
  std::vector<FinMap> sig;
  if (flavor == ybst::Flavor::additive) sig = ybst::sigma_maps(s);
  auto rewrite = [&](int x, int y) -> std::pair<int, int> {
    if (flavor == ybst::Flavor::multiplicative) return {s.lam[x](y), s.rho[y](x)};
    return {y, sig[y](x)};
  };

  std::vector<long long> dims;
  for (int k = 0; k <= maxdeg; ++k) {
    std::vector<Word> words;
    Word w(k, 0);
    while (true) {
      words.push_back(w);
      int i = k - 1;
      while (i >= 0 && w[i] == s.n - 1) w[i--] = 0;
      if (i < 0) break;
      ++w[i];
    }
    std::map<Word, int> label;
    for (std::size_t i = 0; i < words.size(); ++i) label[words[i]] = static_cast<int>(i);
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Word& word : words)
        for (int i = 0; i + 1 < k; ++i) {
          auto [x2, y2] = rewrite(word[i], word[i + 1]);
          Word other = word;
          other[i] = x2;
          other[i + 1] = y2;
          int a = label[word], b = label[other];
          if (a != b) {
            int lo = std::min(a, b), hi = std::max(a, b);
            for (auto& [ww, lab] : label)
              if (lab == hi) lab = lo;
            changed = true;
          }
        }
    }
    std::set<int> distinct;
    for (auto& [ww, lab] : label) distinct.insert(lab);
    dims.push_back(static_cast<long long>(distinct.size()));
  }
  return dims;
}

// Orbit count of the braid-position action on words of one degree; for
// involutive non-degenerate solutions this equals the class count.
inline long long orbit_count(const Solution& s, int degree) {
  std::vector<Word> words;
  Word w(degree, 0);
  while (true) {
    words.push_back(w);
    int i = degree - 1;
    while (i >= 0 && w[i] == s.n - 1) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  std::map<Word, int> idx;
  for (std::size_t i = 0; i < words.size(); ++i) idx[words[i]] = static_cast<int>(i);
  std::vector<int> parent(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const Word& word : words)
    for (int i = 0; i + 1 < degree; ++i) {
      auto [u, v] = s.apply(word[i], word[i + 1]);
      Word other = word;
      other[i] = u;
      other[i + 1] = v;
      int a = find(idx[word]), b = find(idx[other]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  long long orbits = 0;
  for (std::size_t i = 0; i < words.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++orbits;
  return orbits;
}

// Independent retract construction by pairwise table comparison.
inline Solution naive_retract(const Solution& s) {
  const int n = s.n;
  std::vector<int> cls(n, -1);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < x; ++y)
      if (s.lam[x].table() == s.lam[y].table() && s.rho[x].table() == s.rho[y].table()) {
        cls[x] = cls[y];
        break;
      }
    if (cls[x] < 0) cls[x] = next++;
  }
  std::vector<int> rep(next, -1);
  for (int x = n - 1; x >= 0; --x) rep[cls[x]] = x;
  Solution q;
  q.n = next;
  for (int c = 0; c < next; ++c) {
    std::vector<int> lrow(next), rrow(next);
    for (int d = 0; d < next; ++d) {
      lrow[d] = cls[s.lam[rep[c]](rep[d])];
      rrow[d] = cls[s.rho[rep[c]](rep[d])];
    }
    q.lam.emplace_back(next, std::move(lrow));
    q.rho.emplace_back(next, std::move(rrow));
  }
  return q;
}

}  // namespace support
