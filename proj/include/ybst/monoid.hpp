#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ybst/errors.hpp"
#include "ybst/fin_map.hpp"
#include "ybst/solution.hpp"

namespace ybst {

enum class Flavor { multiplicative, additive };

inline const char* flavor_name(Flavor f) {
  return f == Flavor::multiplicative ? "multiplicative" : "additive";
}

using Word = std::vector<int>;  // letters in {0,...,n-1}

inline constexpr long long kDefaultWordBudget = 20'000'000;

namespace detail {

// Words of one degree are indexed in base n, first letter most significant,
// so numeric order coincides with lexicographic order.
class WordCodec {
 public:
  WordCodec(int n, int degree) : n_(n), pow_(degree + 1) {
    pow_[0] = 1;
    for (int i = 1; i <= degree; ++i) pow_[i] = pow_[i - 1] * n;
  }
  long long count(int degree) const { return pow_[degree]; }
  int letter(long long w, int pos, int degree) const {
    return static_cast<int>((w / pow_[degree - 1 - pos]) % n_);
  }
  long long place(int pos, int degree) const { return pow_[degree - 1 - pos]; }

 private:
  int n_;
  std::vector<long long> pow_;
};

// Union-find whose root is always the least element of its class.
class MinUnionFind {
 public:
  explicit MinUnionFind(long long size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int32_t find(int32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void merge(int32_t a, int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent_[b] = a;
    else
      parent_[a] = b;
  }

 private:
  std::vector<int32_t> parent_;
};

}  // namespace detail

struct DegreeClasses {
  std::vector<int32_t> rep;         // rep[w] = least word equivalent to w
  std::vector<int32_t> class_reps;  // sorted canonical representatives
};

// Length-preserving congruence closure of the defining relations, degree by
// degree. rep tables give canonical (lexicographically least) representatives.
struct GradedClasses {
  int n = 0;
  Flavor flavor = Flavor::multiplicative;
  int maxdeg = 0;
  std::vector<DegreeClasses> deg;  // index 0..maxdeg
  std::vector<long long> dims;     // dims[k] = number of classes in degree k
};

inline long long word_index(const Word& w, int n) {
  long long idx = 0;
  for (int letter : w) idx = idx * n + letter;
  return idx;
}

inline Word word_from_index(long long idx, int n, int degree) {
  Word w(degree);
  for (int i = degree - 1; i >= 0; --i) {
    w[i] = static_cast<int>(idx % n);
    idx /= n;
  }
  return w;
}

inline GradedClasses grow_classes(const Solution& s, int maxdeg, Flavor flavor,
                                  long long budget = kDefaultWordBudget) {
  validate_solution(s);
  if (!is_lnd(s)) throw precondition_error("grow_classes requires a left non-degenerate solution");
  if (maxdeg < 0) throw input_error("grow_classes: negative degree");

  const int n = s.n;
  {
    long long words = 1;
    for (int k = 1; k <= maxdeg; ++k) {
      if (words > budget / n)
        throw resource_error("word budget exceeded: " + std::to_string(n) + "^" +
                             std::to_string(k) + " > " + std::to_string(budget));
      words *= n;
    }
  }

  std::vector<FinMap> sig;
  if (flavor == Flavor::additive) sig = sigma_maps(s);
  auto rewrite = [&](int x, int y) -> std::pair<int, int> {
    if (flavor == Flavor::multiplicative) return {s.lam[x](y), s.rho[y](x)};
    return {y, sig[y](x)};
  };

  GradedClasses g;
  g.n = n;
  g.flavor = flavor;
  g.maxdeg = maxdeg;
  g.deg.resize(maxdeg + 1);
  g.dims.resize(maxdeg + 1);

  for (int k = 0; k <= maxdeg; ++k) {
    detail::WordCodec codec(n, k);
    const long long count = codec.count(k);
    detail::MinUnionFind uf(count);
    if (k >= 2) {
      for (long long w = 0; w < count; ++w)
        for (int i = 0; i + 1 < k; ++i) {
          int x = codec.letter(w, i, k);
          int y = codec.letter(w, i + 1, k);
          auto [x2, y2] = rewrite(x, y);
          if (x2 != x || y2 != y) {
            long long w2 = w + (x2 - x) * codec.place(i, k) + (y2 - y) * codec.place(i + 1, k);
            uf.merge(static_cast<int32_t>(w), static_cast<int32_t>(w2));
          }
        }
    }
    DegreeClasses& dc = g.deg[k];
    dc.rep.resize(count);
    for (long long w = 0; w < count; ++w) {
      dc.rep[w] = uf.find(static_cast<int32_t>(w));
      if (dc.rep[w] == w) dc.class_reps.push_back(static_cast<int32_t>(w));
    }
    g.dims[k] = static_cast<long long>(dc.class_reps.size());
  }
  return g;
}

struct GradedDims {
  std::vector<long long> dims_mul;
  std::vector<long long> dims_add;
  bool pi_agrees = false;
};

// The 1-cocycle identifying the structure monoid with the derived monoid is
// bijective for left non-degenerate solutions, so the two graded dimension
// sequences must agree.
inline GradedDims graded_dims(const Solution& s, int maxdeg,
                              long long budget = kDefaultWordBudget) {
  GradedDims out;
  out.dims_mul = grow_classes(s, maxdeg, Flavor::multiplicative, budget).dims;
  out.dims_add = grow_classes(s, maxdeg, Flavor::additive, budget).dims;
  out.pi_agrees = out.dims_mul == out.dims_add;
  if (!out.pi_agrees)
    throw std::logic_error("internal invariant failed: multiplicative and additive graded "
                           "dimensions differ for a left non-degenerate solution");
  return out;
}

struct ExtendedMaps {
  Perm lamX;    // restriction of lambda_w to X, multiplicative extension
  FinMap sigX;  // restriction of sigma_w to X, additive extension
};

// lambda extends along multiplicative words as a homomorphism,
// sigma along additive words as an anti-homomorphism.
inline ExtendedMaps extend_maps(const Solution& s, const Word& word, Flavor flavor) {
  validate_solution(s);
  (void)flavor;  // both extensions are defined by the word itself
  if (!is_lnd(s)) throw precondition_error("extend_maps requires a left non-degenerate solution");
  for (int letter : word)
    if (letter < 0 || letter >= s.n) throw input_error("extend_maps: letter out of range");

  std::vector<FinMap> sig = sigma_maps(s);
  FinMap lam = FinMap::identity(s.n);
  FinMap sg = FinMap::identity(s.n);
  for (int letter : word) {
    lam = lam.after(s.lam[letter]);
    sg = sig[letter].after(sg);
  }
  return ExtendedMaps{Perm(lam), sg};
}

// Class of the concatenation w1.w2 inside precomputed classes.
inline long long monoid_op(const GradedClasses& classes, const Word& w1, const Word& w2) {
  const int k = static_cast<int>(w1.size() + w2.size());
  if (k > classes.maxdeg)
    throw resource_error("monoid_op: degree " + std::to_string(k) + " beyond computed degree " +
                         std::to_string(classes.maxdeg));
  Word cat = w1;
  cat.insert(cat.end(), w2.begin(), w2.end());
  for (int letter : cat)
    if (letter < 0 || letter >= classes.n) throw input_error("monoid_op: letter out of range");
  return classes.deg[k].rep[word_index(cat, classes.n)];
}

// Greedy normal form over the additive relations: extract the maximal power
// of x_0 dividing the class on the left, then x_1 on the remainder, etc.
// Returns the exponent vector (m_0, ..., m_{n-1}).
inline std::vector<int> greedy_normal_form(const GradedClasses& classes, const Word& word) {
  if (classes.flavor != Flavor::additive)
    throw input_error("greedy_normal_form requires additive classes");
  const int n = classes.n;
  int k = static_cast<int>(word.size());
  if (k > classes.maxdeg)
    throw resource_error("greedy_normal_form: degree " + std::to_string(k) +
                         " beyond computed degree " + std::to_string(classes.maxdeg));
  for (int letter : word)
    if (letter < 0 || letter >= n) throw input_error("greedy_normal_form: letter out of range");

  std::vector<int> m(n, 0);
  long long cls = classes.deg[k].rep[word_index(word, n)];
  for (int gen = 0; gen < n && k > 0; ++gen) {
    detail::WordCodec codec(n, k);
    // Maximal initial run of `gen` over all members of the class, realized by
    // the least such member.
    int best_run = 0;
    long long best_word = -1;
    for (long long w = 0; w < codec.count(k); ++w) {
      if (classes.deg[k].rep[w] != cls) continue;
      int run = 0;
      while (run < k && codec.letter(w, run, k) == gen) ++run;
      if (run > best_run) {
        best_run = run;
        best_word = w;
      }
    }
    if (best_run == 0) continue;
    m[gen] = best_run;
    k -= best_run;
    long long suffix = best_word % codec.count(k);
    cls = classes.deg[k].rep[suffix];
  }

  if (k != 0)
    throw std::logic_error("internal invariant failed: greedy extraction left a nonzero remainder");
  Word rebuilt;
  for (int gen = 0; gen < n; ++gen) rebuilt.insert(rebuilt.end(), m[gen], gen);
  if (classes.deg[word.size()].rep[word_index(rebuilt, n)] !=
      classes.deg[word.size()].rep[word_index(word, n)])
    throw std::logic_error("internal invariant failed: normal form left the class");
  return m;
}

// Least v >= 1 such that sigma_x^v is idempotent for every generator x.
inline int idempotent_exponent_of(const std::vector<FinMap>& gens) {
  for (int v = 1; v <= 4096; ++v) {
    bool all = true;
    for (const FinMap& g : gens)
      if (!g.power(v).is_idempotent()) {
        all = false;
        break;
      }
    if (all) return v;
  }
  throw std::logic_error("internal invariant failed: no idempotent exponent found");
}

struct BvReport {
  int v = 0;
  long long classes_checked = 0;
  // Classes where appending the residues of the greedy exponents directly
  // after the v-blocks stays in the class.
  long long greedy_split_exact = 0;
  bool all_decompose = true;  // every class lies in B(v) + F(v)
};

// Verifies the decomposition A = B(v) + F(v) degree by degree: every class is
// a sum of v-th powers of generators followed by residues with exponents < v.
inline BvReport bv_decomposition(const Solution& s, int maxdeg,
                                 long long budget = kDefaultWordBudget) {
  GradedClasses classes = grow_classes(s, maxdeg, Flavor::additive, budget);
  const int n = s.n;
  BvReport rep;
  rep.v = idempotent_exponent_of(sigma_maps(s));
  const int v = rep.v;

  for (int k = 0; k <= maxdeg; ++k) {
    for (int32_t cls : classes.deg[k].class_reps) {
      ++rep.classes_checked;
      Word cw = word_from_index(cls, n, k);
      std::vector<int> m = greedy_normal_form(classes, cw);

      Word direct;
      for (int gen = 0; gen < n; ++gen)
        direct.insert(direct.end(), (m[gen] / v) * v, gen);  // b part, ascending blocks
      for (int gen = 0; gen < n; ++gen)
        direct.insert(direct.end(), m[gen] % v, gen);  // f part, residues < v
      bool direct_ok = classes.deg[k].rep[word_index(direct, n)] == cls;
      if (direct_ok) {
        ++rep.greedy_split_exact;
        continue;
      }

      // Search all splits b + f with b a word of v-blocks and f a residue
      // vector with entries < v.
      bool found = false;
      std::vector<int> residue(n, 0);
      auto next_residue = [&]() {
        for (int i = 0; i < n; ++i) {
          if (++residue[i] < v) return true;
          residue[i] = 0;
        }
        return false;
      };
      do {
        int rsum = std::accumulate(residue.begin(), residue.end(), 0);
        if (rsum > k || (k - rsum) % v != 0) continue;
        int blocks = (k - rsum) / v;
        std::vector<int> js(blocks, 0);
        bool more = true;
        while (more && !found) {
          Word cand;
          for (int j : js) cand.insert(cand.end(), v, j);
          for (int gen = 0; gen < n; ++gen) cand.insert(cand.end(), residue[gen], gen);
          if (classes.deg[k].rep[word_index(cand, n)] == cls) found = true;
          more = false;
          for (int i = 0; i < blocks; ++i) {
            if (++js[i] < n) {
              more = true;
              break;
            }
            js[i] = 0;
          }
        }
      } while (!found && next_residue());
      if (!found) {
        rep.all_decompose = false;
        throw std::logic_error("internal invariant failed: class outside B(v) + F(v)");
      }
    }
  }
  return rep;
}

// Finite-difference estimate of the degree of polynomial growth of the
// cumulative dimension sequence. Strides > 1 absorb quasi-periodic dimension
// sequences.
inline int growth_degree_estimate(const Solution& s, int dmax,
                                  long long budget = kDefaultWordBudget) {
  validate_solution(s);
  if (dmax < 2 * s.n)
    throw resource_error("growth estimate needs dmax >= 2n, got dmax = " + std::to_string(dmax));
  std::vector<long long> dims = grow_classes(s, dmax, Flavor::additive, budget).dims;
  std::vector<long long> cum(dims.size());
  std::partial_sum(dims.begin(), dims.end(), cum.begin());

  int best = std::numeric_limits<int>::max();
  for (int stride = 1; stride <= 3; ++stride) {
    std::vector<long long> pts;
    for (int j = dmax % stride; j <= dmax; j += stride) pts.push_back(cum[j]);
    const int count = static_cast<int>(pts.size());
    for (int k = 0; k + 2 <= count; ++k) {
      // (k+1)-th differences; nonpositive tail certifies degree <= k.
      std::vector<long long> d = pts;
      for (int it = 0; it <= k; ++it)
        for (int i = static_cast<int>(d.size()) - 1; i >= 1; --i) d[i] -= d[i - 1];
      int tail = std::min<int>(2, static_cast<int>(d.size()) - (k + 1));
      bool ok = tail > 0;
      for (int i = 0; i < tail; ++i)
        if (d[d.size() - 1 - i] > 0) ok = false;
      if (ok) {
        best = std::min(best, k);
        break;
      }
    }
  }
  if (best > s.n)
    throw std::logic_error("internal invariant failed: growth estimate exceeds the carrier size");
  return best;
}

}  // namespace ybst
