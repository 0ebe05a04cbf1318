#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ybst/errors.hpp"
#include "ybst/fin_map.hpp"
#include "ybst/monoid.hpp"
#include "ybst/semitruss.hpp"
#include "ybst/solution.hpp"

namespace ybst {

// The endomorphism semigroup C = <sigma generators> under composition.
// Elements are kept in BFS order from the generators, deduplicated by table.
struct CSemigroup {
  int n = 0;                     // size of the carrier the maps act on
  std::vector<FinMap> elements;  // closed under composition
  std::vector<FinMap> gens;
  std::vector<int> idempotents;  // indices into elements
};

namespace detail {

inline CSemigroup close_under_composition(int n, std::vector<FinMap> gens) {
  CSemigroup c;
  c.n = n;
  std::map<FinMap, int> index;
  for (const FinMap& g : gens) {
    if (index.emplace(g, static_cast<int>(c.elements.size())).second) c.elements.push_back(g);
  }
  c.gens = std::move(gens);
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    for (const FinMap& g : c.gens) {
      FinMap prod = c.elements[i].after(g);
      if (index.emplace(prod, static_cast<int>(c.elements.size())).second)
        c.elements.push_back(prod);
      FinMap prod2 = g.after(c.elements[i]);
      if (index.emplace(prod2, static_cast<int>(c.elements.size())).second)
        c.elements.push_back(prod2);
    }
  }
  for (std::size_t i = 0; i < c.elements.size(); ++i)
    if (c.elements[i].is_idempotent()) c.idempotents.push_back(static_cast<int>(i));
  return c;
}

inline void assert_left_ideals_two_sided(const CSemigroup& c) {
  // sigma_f C subset of C sigma_f for every f.
  for (const FinMap& f : c.elements)
    for (const FinMap& g : c.elements) {
      bool found = false;
      for (const FinMap& h : c.elements)
        if (f.after(g) == h.after(f)) {
          found = true;
          break;
        }
      if (!found)
        throw std::logic_error("internal invariant failed: sigma_f C is not contained in C sigma_f");
    }
}

}  // namespace detail

inline CSemigroup generate_c(const SemiTruss& t) {
  require_semitruss(t);
  CSemigroup c = detail::close_under_composition(t.m, t.sig);
  detail::assert_left_ideals_two_sided(c);
  return c;
}

inline CSemigroup generate_c(const Solution& s) {
  if (!check_ybe(s).valid) throw precondition_error("generate_c requires a YBE solution");
  CSemigroup c = detail::close_under_composition(s.n, sigma_maps(s));
  detail::assert_left_ideals_two_sided(c);
  return c;
}

inline int idempotent_exponent(const CSemigroup& c) { return idempotent_exponent_of(c.gens); }

// True iff the subsemigroup generated by the v-th powers of the generators
// consists of idempotents.
inline bool band_check(const CSemigroup& c, int v) {
  std::vector<FinMap> powered;
  for (const FinMap& g : c.gens) powered.push_back(g.power(v));
  CSemigroup sub = detail::close_under_composition(c.n, std::move(powered));
  return std::all_of(sub.elements.begin(), sub.elements.end(),
                     [](const FinMap& f) { return f.is_idempotent(); });
}

struct DecompositionBlock {
  int idempotent = -1;             // index into c.elements
  std::vector<int> group;          // maximal subgroup G_e, indices into c.elements
  std::vector<int> members;        // A_e = sigma^{-1}(G_e), carrier elements
  std::vector<int> orbit;          // G_e(A_e), carrier elements
  bool left_ideal = true;          // A + A_e in A_e
  bool restricted_bijective = true;  // s restricted to the orbit is bijective non-degenerate
};

struct LeftSimpleReport {
  CSemigroup c;
  bool left_simple = false;
  std::vector<DecompositionBlock> blocks;
  bool partition_ok = true;
  bool cross_formula_ok = true;
  // When not left simple: the distinct principal left ideals, as sorted
  // element-index sets ordered by size (a descriptive sketch only).
  std::vector<std::vector<int>> principal_left_ideals;
};

// When C is left simple, A decomposes into a disjoint union of left ideals A_e
// with the derived solution restricting to bijective non-degenerate pieces.
// For non-left-simple C a descriptive verdict is returned, not an error.
inline LeftSimpleReport left_simple_decomposition(const SemiTruss& t) {
  LeftSimpleReport rep;
  rep.c = generate_c(t);
  const CSemigroup& c = rep.c;
  const int sz = static_cast<int>(c.elements.size());

  std::map<FinMap, int> index;
  for (int i = 0; i < sz; ++i) index.emplace(c.elements[i], i);
  auto mul = [&](int i, int j) { return index.at(c.elements[i].after(c.elements[j])); };

  rep.left_simple = true;
  for (int f = 0; f < sz; ++f) {
    std::set<int> ideal;
    for (int g = 0; g < sz; ++g) ideal.insert(mul(g, f));
    if (static_cast<int>(ideal.size()) != sz) {
      rep.left_simple = false;
      ideal.insert(f);  // principal left ideal C^1 f
      std::vector<int> v(ideal.begin(), ideal.end());
      if (std::find(rep.principal_left_ideals.begin(), rep.principal_left_ideals.end(), v) ==
          rep.principal_left_ideals.end())
        rep.principal_left_ideals.push_back(std::move(v));
    }
  }
  if (!rep.left_simple) {
    std::sort(rep.principal_left_ideals.begin(), rep.principal_left_ideals.end(),
              [](const auto& a, const auto& b) {
                return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    return rep;
  }

  std::vector<int> sig_index(t.m);
  for (int a = 0; a < t.m; ++a) sig_index[a] = index.at(t.sig[a]);

  for (int e : c.idempotents) {
    DecompositionBlock blk;
    blk.idempotent = e;
    for (int g = 0; g < sz; ++g) {
      if (mul(g, e) != g || mul(e, g) != g) continue;
      for (int h = 0; h < sz; ++h)
        if (mul(h, e) == h && mul(e, h) == h && mul(g, h) == e && mul(h, g) == e) {
          blk.group.push_back(g);
          break;
        }
    }
    for (int a = 0; a < t.m; ++a)
      if (std::find(blk.group.begin(), blk.group.end(), sig_index[a]) != blk.group.end())
        blk.members.push_back(a);

    std::set<int> orbit;
    for (int g : blk.group)
      for (int a : blk.members) orbit.insert(c.elements[g](a));
    blk.orbit.assign(orbit.begin(), orbit.end());

    for (int x = 0; x < t.m; ++x)
      for (int a : blk.members)
        if (std::find(blk.members.begin(), blk.members.end(), t.add[x][a]) == blk.members.end())
          blk.left_ideal = false;

    // s(a,b) = (b, sigma_b(a)) restricted to the orbit: closed and bijective.
    std::set<std::pair<int, int>> image;
    for (int a : blk.orbit)
      for (int b : blk.orbit) {
        int sb = t.sig[b](a);
        if (!orbit.count(sb)) blk.restricted_bijective = false;
        if (!image.insert({b, sb}).second) blk.restricted_bijective = false;
      }

    rep.blocks.push_back(std::move(blk));
  }

  // Disjointness of the A_e and totality over A.
  std::vector<int> seen(t.m, 0);
  for (const DecompositionBlock& blk : rep.blocks)
    for (int a : blk.members) ++seen[a];
  for (int a = 0; a < t.m; ++a)
    if (seen[a] != 1) rep.partition_ok = false;

  // Cross terms: s(a_e, a_f) = (a_f, sigma_{f(a_f)}(f(a_e))) with f the
  // idempotent of the block of a_f.
  for (const DecompositionBlock& fblk : rep.blocks) {
    const FinMap& fmap = c.elements[fblk.idempotent];
    for (int af : fblk.members)
      for (int ae = 0; ae < t.m; ++ae)
        if (t.sig[af](ae) != t.sig[fmap(af)](fmap(ae))) rep.cross_formula_ok = false;
  }

  return rep;
}

}  // namespace ybst
