#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybst/errors.hpp"
#include "ybst/fin_map.hpp"

namespace ybst {

// Finite set-theoretic map r(x,y) = (lam[x](y), rho[y](x)) on {0,...,n-1}^2.
// Whether it actually satisfies the braid relation is checked by check_ybe,
// never assumed.
struct Solution {
  int n = 0;
  std::vector<FinMap> lam;  // lam[x] = lambda_x
  std::vector<FinMap> rho;  // rho[y] = rho_y

  std::pair<int, int> apply(int x, int y) const { return {lam[x](y), rho[y](x)}; }
};

inline void validate_solution(const Solution& s) {
  if (s.n <= 0) throw input_error("solution: carrier must be non-empty");
  if (static_cast<int>(s.lam.size()) != s.n || static_cast<int>(s.rho.size()) != s.n)
    throw input_error("solution: need n lambda rows and n rho rows");
  for (const FinMap& f : s.lam)
    if (f.size() != s.n) throw input_error("solution: lambda row has wrong carrier size");
  for (const FinMap& f : s.rho)
    if (f.size() != s.n) throw input_error("solution: rho row has wrong carrier size");
}

inline bool is_lnd(const Solution& s) {
  return std::all_of(s.lam.begin(), s.lam.end(), [](const FinMap& f) { return f.is_permutation(); });
}

inline bool is_rnd(const Solution& s) {
  return std::all_of(s.rho.begin(), s.rho.end(), [](const FinMap& f) { return f.is_permutation(); });
}

struct YbeViolation {
  std::string eq;  // "YBE1" | "YBE2" | "YBE3"
  int a, b, c;
};

struct YbeReport {
  bool valid = true;
  std::vector<YbeViolation> violations;
};

// Checks the three component identities of the braid relation over all n^3
// triples and reports every failure.
inline YbeReport check_ybe(const Solution& s) {
  validate_solution(s);
  YbeReport rep;
  const int n = s.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        // lambda_a lambda_b = lambda_{lambda_a(b)} lambda_{rho_b(a)}
        if (s.lam[a](s.lam[b](c)) != s.lam[s.lam[a](b)](s.lam[s.rho[b](a)](c)))
          rep.violations.push_back({"YBE1", a, b, c});
        // lambda_{rho_{lambda_b(c)}(a)} rho_c(b) = rho_{lambda_{rho_b(a)}(c)} lambda_a(b)
        if (s.lam[s.rho[s.lam[b](c)](a)](s.rho[c](b)) != s.rho[s.lam[s.rho[b](a)](c)](s.lam[a](b)))
          rep.violations.push_back({"YBE2", a, b, c});
        // rho_c rho_b = rho_{rho_c(b)} rho_{lambda_b(c)}
        if (s.rho[c](s.rho[b](a)) != s.rho[s.rho[c](b)](s.rho[s.lam[b](c)](a)))
          rep.violations.push_back({"YBE3", a, b, c});
      }
  rep.valid = rep.violations.empty();
  return rep;
}

struct PropertyFlags {
  bool lnd = false;
  bool rnd = false;
  bool bijective = false;
  bool involutive = false;
  bool idempotent = false;
};

// Pure table predicates; meaningful as solution properties only when
// check_ybe passes.
inline PropertyFlags classify(const Solution& s) {
  validate_solution(s);
  PropertyFlags f;
  f.lnd = is_lnd(s);
  f.rnd = is_rnd(s);

  const int n = s.n;
  std::vector<char> hit(static_cast<std::size_t>(n) * n, 0);
  f.bijective = true;
  for (int x = 0; x < n && f.bijective; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = s.apply(x, y);
      char& cell = hit[static_cast<std::size_t>(u) * n + v];
      if (cell) {
        f.bijective = false;
        break;
      }
      cell = 1;
    }

  f.involutive = true;
  f.idempotent = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = s.apply(x, y);
      auto rr = s.apply(u, v);
      if (rr != std::pair<int, int>{x, y}) f.involutive = false;
      if (rr != std::pair<int, int>{u, v}) f.idempotent = false;
    }
  return f;
}

inline Perm lambda_inverse(const Solution& s, int x) {
  if (!s.lam[x].is_permutation())
    throw precondition_error("lambda row " + std::to_string(x) +
                             " is not bijective (solution not left non-degenerate)");
  return Perm(s.lam[x]).inverse();
}

// sigma_y(x) = lambda_y rho_{lambda_x^{-1}(y)}(x); encodes x + y = y + sigma_y(x).
inline std::vector<FinMap> sigma_maps(const Solution& s) {
  validate_solution(s);
  const int n = s.n;
  std::vector<Perm> lam_inv;
  lam_inv.reserve(n);
  for (int x = 0; x < n; ++x) lam_inv.push_back(lambda_inverse(s, x));
  std::vector<FinMap> sig;
  sig.reserve(n);
  for (int y = 0; y < n; ++y) {
    std::vector<int> t(n);
    for (int x = 0; x < n; ++x) t[x] = s.lam[y](s.rho[lam_inv[x](y)](x));
    sig.emplace_back(n, std::move(t));
  }
  return sig;
}

namespace detail {
inline void require_solution_equal(const Solution& a, const Solution& b, const char* what) {
  if (a.n != b.n || a.lam != b.lam || a.rho != b.rho)
    throw std::logic_error(std::string("internal invariant failed: ") + what);
}
}  // namespace detail

// s(x,y) = (y, sigma_y(x)). The output is itself a solution and is bijective
// iff the input is; both facts are re-verified.
inline Solution derived_solution(const Solution& s) {
  if (!check_ybe(s).valid)
    throw precondition_error("derived solution requires a YBE solution");
  std::vector<FinMap> sig = sigma_maps(s);
  Solution d;
  d.n = s.n;
  d.lam.assign(s.n, FinMap::identity(s.n));
  d.rho = std::move(sig);
  if (!check_ybe(d).valid)
    throw std::logic_error("internal invariant failed: derived solution does not satisfy YBE");
  if (classify(d).bijective != classify(s).bijective)
    throw std::logic_error("internal invariant failed: derived/original bijectivity mismatch");
  return d;
}

// r'(a,b) = (sigma_a^{-1} lambda_a(b), lambda^{-1}_{sigma_a^{-1} lambda_a(b)}(a)).
// Requires every sigma_a bijective, which is equivalent to r bijective.
inline Solution inverse_solution(const Solution& s) {
  if (!check_ybe(s).valid)
    throw precondition_error("inverse solution requires a YBE solution");
  std::vector<FinMap> sig = sigma_maps(s);
  for (int a = 0; a < s.n; ++a)
    if (!sig[a].is_permutation())
      throw precondition_error("solution not bijective: sigma_" + std::to_string(a) +
                               " is not invertible");
  const int n = s.n;
  std::vector<Perm> sig_inv, lam_inv;
  for (int a = 0; a < n; ++a) {
    sig_inv.push_back(Perm(sig[a]).inverse());
    lam_inv.push_back(lambda_inverse(s, a));
  }

  Solution inv;
  inv.n = n;
  for (int a = 0; a < n; ++a) {
    std::vector<int> t(n);
    for (int b = 0; b < n; ++b) t[b] = sig_inv[a](s.lam[a](b));
    inv.lam.emplace_back(n, std::move(t));
  }
  for (int b = 0; b < n; ++b) {
    std::vector<int> t(n);
    for (int a = 0; a < n; ++a) t[a] = lam_inv[sig_inv[a](s.lam[a](b))](a);
    inv.rho.emplace_back(n, std::move(t));
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto [u, v] = s.apply(a, b);
      if (inv.apply(u, v) != std::pair<int, int>{a, b})
        throw std::logic_error("internal invariant failed: r' is not a left inverse of r");
      auto [p, q] = inv.apply(a, b);
      if (s.apply(p, q) != std::pair<int, int>{a, b})
        throw std::logic_error("internal invariant failed: r' is not a right inverse of r");
    }
  return inv;
}

struct DiagonalResult {
  FinMap q;
  bool bijective = false;
};

// q(x) = lambda_x^{-1}(x). For non-degenerate input q must be injective; when
// additionally x -> (lambda_x, rho_x) is injective, the inverse is
// a -> rho_a^{-1}(a).
inline DiagonalResult diagonal(const Solution& s) {
  validate_solution(s);
  const int n = s.n;
  std::vector<int> t(n);
  for (int x = 0; x < n; ++x) t[x] = lambda_inverse(s, x)(x);
  DiagonalResult res{FinMap(n, std::move(t)), false};
  res.bijective = res.q.is_permutation();

  // Injectivity of q and the rho-based inverse are guaranteed only for
  // genuine non-degenerate solutions.
  if (is_rnd(s) && check_ybe(s).valid) {
    if (!res.bijective)
      throw std::logic_error("internal invariant failed: diagonal of a non-degenerate solution "
                             "must be injective on a finite carrier");
    bool separated = true;
    for (int a = 0; a < n && separated; ++a)
      for (int b = a + 1; b < n; ++b)
        if (s.lam[a] == s.lam[b] && s.rho[a] == s.rho[b]) {
          separated = false;
          break;
        }
    if (separated) {
      for (int a = 0; a < n; ++a)
        if (res.q(Perm(s.rho[a]).inverse()(a)) != a)
          throw std::logic_error("internal invariant failed: rho_a^{-1}(a) does not invert the "
                                 "diagonal map");
    }
  }
  return res;
}

// Exhaustive isomorphism search: f with (f x f) r1 = r2 (f x f), lexicographically
// first witness. Guarded to small carriers.
inline std::optional<Perm> are_isomorphic(const Solution& s1, const Solution& s2) {
  validate_solution(s1);
  validate_solution(s2);
  if (s1.n != s2.n) return std::nullopt;
  const int n = s1.n;
  if (n > 8) throw resource_error("isomorphism search guarded to n <= 8, got n = " + std::to_string(n));

  // Relabeling preserves the multiset of per-row image sizes; cheap reject.
  auto row_profile = [n](const std::vector<FinMap>& rows) {
    std::vector<int> prof;
    for (const FinMap& f : rows) {
      std::vector<char> seen(n, 0);
      int distinct = 0;
      for (int v : f.table())
        if (!seen[v]) {
          seen[v] = 1;
          ++distinct;
        }
      prof.push_back(distinct);
    }
    std::sort(prof.begin(), prof.end());
    return prof;
  };
  if (row_profile(s1.lam) != row_profile(s2.lam) || row_profile(s1.rho) != row_profile(s2.rho))
    return std::nullopt;

  std::vector<int> f(n);
  for (int i = 0; i < n; ++i) f[i] = i;
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n; ++y)
        if (f[s1.lam[x](y)] != s2.lam[f[x]](f[y]) || f[s1.rho[y](x)] != s2.rho[f[y]](f[x])) {
          ok = false;
          break;
        }
    if (ok) return Perm(n, f);
  } while (std::next_permutation(f.begin(), f.end()));
  return std::nullopt;
}

struct RetractResult {
  Solution quotient;
  FinMap proj;
  bool well_defined = false;
};

// Identifies x ~ y iff (lambda_x, rho_x) = (lambda_y, rho_y) and induces the
// map on classes. well_defined reports representative independence together
// with the quotient passing check_ybe; both are guaranteed when the input is
// non-degenerate and bijective.
inline RetractResult retract_solution(const Solution& s) {
  validate_solution(s);
  const int n = s.n;
  std::vector<int> cls(n, -1);
  std::vector<int> reps;  // smallest index per class, in order of appearance
  for (int x = 0; x < n; ++x) {
    for (int r : reps)
      if (s.lam[x] == s.lam[r] && s.rho[x] == s.rho[r]) {
        cls[x] = cls[r];
        break;
      }
    if (cls[x] < 0) {
      cls[x] = static_cast<int>(reps.size());
      reps.push_back(x);
    }
  }
  const int k = static_cast<int>(reps.size());

  Solution q;
  q.n = k;
  for (int c = 0; c < k; ++c) {
    std::vector<int> lrow(k), rrow(k);
    for (int d = 0; d < k; ++d) {
      lrow[d] = cls[s.lam[reps[c]](reps[d])];
      rrow[d] = cls[s.rho[reps[c]](reps[d])];
    }
    q.lam.emplace_back(k, std::move(lrow));
    q.rho.emplace_back(k, std::move(rrow));
  }

  bool independent = true;
  for (int x = 0; x < n && independent; ++x)
    for (int y = 0; y < n; ++y) {
      if (cls[s.lam[x](y)] != q.lam[cls[x]](cls[y]) || cls[s.rho[x](y)] != q.rho[cls[x]](cls[y])) {
        independent = false;
        break;
      }
    }

  RetractResult res;
  res.well_defined = independent && check_ybe(q).valid;
  res.quotient = std::move(q);
  res.proj = FinMap(n, cls);

  PropertyFlags in_flags = classify(s);
  if (in_flags.lnd && in_flags.rnd && in_flags.bijective && check_ybe(s).valid) {
    if (!res.well_defined)
      throw std::logic_error("internal invariant failed: retract of a non-degenerate bijective "
                             "solution must be well-defined");
    PropertyFlags out_flags = classify(res.quotient);
    if (!out_flags.lnd || !out_flags.rnd)
      throw std::logic_error("internal invariant failed: retract of a non-degenerate bijective "
                             "solution must be non-degenerate");
  }
  return res;
}

}  // namespace ybst
