#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ybst/errors.hpp"
#include "ybst/fin_map.hpp"
#include "ybst/monoid.hpp"
#include "ybst/solution.hpp"

namespace ybst {

struct SearchSpec {
  int n = 2;
  bool require_lnd = false;
  bool require_rnd = false;
  bool require_bijective = false;
  bool require_involutive = false;
  bool require_idempotent = false;
  bool dedup = false;
  long long budget = 50'000'000;  // cap on the a-priori candidate space
  int jobs = 1;
};

struct EnumerationSummary {
  long long space = 0;   // a-priori size of the (lambda, rho) candidate space
  long long leaves = 0;  // fully assigned tables that were checked
  long long raw = 0;     // tables passing YBE and all constraint flags
  long long emitted = 0;
  std::map<std::string, long long> by_properties;  // counts per property combination
};

inline std::string property_key(const PropertyFlags& f) {
  std::string k;
  auto tag = [&k](bool v, const char* name) {
    if (v) {
      if (!k.empty()) k += '+';
      k += name;
    }
  };
  tag(f.lnd, "lnd");
  tag(f.rnd, "rnd");
  tag(f.bijective, "bijective");
  tag(f.involutive, "involutive");
  tag(f.idempotent, "idempotent");
  return k.empty() ? "none" : k;
}

inline std::vector<int> solution_key(const Solution& s) {
  std::vector<int> key;
  key.reserve(2 * s.n * s.n);
  for (const FinMap& f : s.lam) key.insert(key.end(), f.table().begin(), f.table().end());
  for (const FinMap& f : s.rho) key.insert(key.end(), f.table().begin(), f.table().end());
  return key;
}

// Least table among all relabelings g . r . (g^{-1} x g^{-1}).
inline std::vector<int> canonical_key(const Solution& s) {
  const int n = s.n;
  std::vector<int> g(n);
  for (int i = 0; i < n; ++i) g[i] = i;
  std::vector<int> best = solution_key(s);
  do {
    std::vector<int> ginv(n);
    for (int i = 0; i < n; ++i) ginv[g[i]] = i;
    std::vector<int> key;
    key.reserve(2 * n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) key.push_back(g[s.lam[ginv[x]](ginv[y])]);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) key.push_back(g[s.rho[ginv[x]](ginv[y])]);
    if (key < best) best = std::move(key);
  } while (std::next_permutation(g.begin(), g.end()));
  return best;
}

inline bool is_canonical(const Solution& s) { return solution_key(s) == canonical_key(s); }

namespace detail {

inline std::vector<std::vector<int>> row_options(int n, bool perms_only) {
  std::vector<std::vector<int>> rows;
  if (perms_only) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do rows.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  } else {
    std::vector<int> t(n, 0);
    while (true) {
      rows.push_back(t);
      int i = n - 1;
      while (i >= 0 && t[i] == n - 1) t[i--] = 0;
      if (i < 0) break;
      ++t[i];
    }
  }
  return rows;
}

struct RawTables {
  int n;
  std::vector<std::vector<int>> lam, rho;
};

inline bool full_ybe_ok(const RawTables& t) {
  const int n = t.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (t.lam[a][t.lam[b][c]] != t.lam[t.lam[a][b]][t.lam[t.rho[b][a]][c]]) return false;
        if (t.lam[t.rho[t.lam[b][c]][a]][t.rho[c][b]] != t.rho[t.lam[t.rho[b][a]][c]][t.lam[a][b]])
          return false;
        if (t.rho[c][t.rho[b][a]] != t.rho[t.rho[c][b]][t.rho[t.lam[b][c]][a]]) return false;
      }
  return true;
}

// Checks YBE2/YBE3 instances whose rho-row dependencies are all among the
// first `filled` rows. YBE1 is enforced by cell domains during the search.
inline bool partial_ybe_ok(const RawTables& t, int filled) {
  const int n = t.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (b < filled && c < filled) {
          int lbc = t.lam[b][c];
          int rba = t.rho[b][a];
          int idx = t.lam[rba][c];
          if (lbc < filled && idx < filled &&
              t.lam[t.rho[lbc][a]][t.rho[c][b]] != t.rho[idx][t.lam[a][b]])
            return false;
          int rcb = t.rho[c][b];
          if (rcb < filled && lbc < filled &&
              t.rho[c][t.rho[b][a]] != t.rho[rcb][t.rho[lbc][a]])
            return false;
        }
      }
  return true;
}

struct ShardResult {
  std::vector<Solution> found;  // passing constraints (pre-dedup filtering applied)
  long long leaves = 0;
  long long raw = 0;
};

inline Solution to_solution(const RawTables& t) {
  Solution s;
  s.n = t.n;
  for (const auto& row : t.lam) s.lam.emplace_back(t.n, row);
  for (const auto& row : t.rho) s.rho.emplace_back(t.n, row);
  return s;
}

inline bool passes_constraints(const SearchSpec& spec, const PropertyFlags& f) {
  if (spec.require_lnd && !f.lnd) return false;
  if (spec.require_rnd && !f.rnd) return false;
  if (spec.require_bijective && !f.bijective) return false;
  if (spec.require_involutive && !f.involutive) return false;
  if (spec.require_idempotent && !f.idempotent) return false;
  return true;
}

inline void search_shard(const SearchSpec& spec, int shard, int jobs, ShardResult& out) {
  const int n = spec.n;
  const bool rho_perms = spec.require_rnd || spec.require_bijective || spec.require_involutive;
  const bool derive_rho = spec.require_involutive && spec.require_lnd;
  std::vector<std::vector<int>> lam_rows = row_options(n, spec.require_lnd);

  RawTables t;
  t.n = n;
  t.lam.assign(n, {});
  t.rho.assign(n, {});

  auto leaf = [&](const RawTables& tables) {
    ++out.leaves;
    if (!full_ybe_ok(tables)) return;
    Solution s = to_solution(tables);
    PropertyFlags f = classify(s);
    if (!passes_constraints(spec, f)) return;
    ++out.raw;
    out.found.push_back(std::move(s));
  };

  // lambda rows are chosen by an odometer over lam_rows; the first row is
  // fixed by the shard.
  std::vector<int> pick(n, 0);
  for (pick[0] = shard; pick[0] < static_cast<int>(lam_rows.size()); pick[0] += jobs) {
    std::fill(pick.begin() + 1, pick.end(), 0);
    while (true) {
      for (int i = 0; i < n; ++i) t.lam[i] = lam_rows[pick[i]];

      if (derive_rho) {
        // For involutive candidates rho is forced: rho_y(x) = lambda^{-1}_{lambda_x(y)}(x).
        std::vector<std::vector<int>> lam_inv(n, std::vector<int>(n));
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) lam_inv[x][t.lam[x][y]] = y;
        for (int y = 0; y < n; ++y) {
          t.rho[y].resize(n);
          for (int x = 0; x < n; ++x) t.rho[y][x] = lam_inv[t.lam[x][y]][x];
        }
        leaf(t);
      } else {
        // Cell domains from YBE1: rho_b(a) = c needs lambda_{lambda_a(b)} lambda_c
        // = lambda_a lambda_b.
        std::vector<std::vector<std::vector<int>>> allowed(
            n, std::vector<std::vector<int>>(n));
        bool feasible = true;
        for (int b = 0; b < n && feasible; ++b)
          for (int a = 0; a < n; ++a) {
            for (int c = 0; c < n; ++c) {
              bool ok = true;
              for (int d = 0; d < n; ++d)
                if (t.lam[t.lam[a][b]][t.lam[c][d]] != t.lam[a][t.lam[b][d]]) {
                  ok = false;
                  break;
                }
              if (ok) allowed[b][a].push_back(c);
            }
            if (allowed[b][a].empty()) {
              feasible = false;
              break;
            }
          }

        if (feasible) {
          // DFS over rho rows in lexicographic order.
          auto dfs = [&](auto&& self, int b) -> void {
            if (b == n) {
              leaf(t);
              return;
            }
            std::vector<int> idx(n, 0);
            while (true) {
              t.rho[b].resize(n);
              for (int a = 0; a < n; ++a) t.rho[b][a] = allowed[b][a][idx[a]];
              bool row_ok = true;
              if (rho_perms) {
                std::vector<char> seen(n, 0);
                for (int a = 0; a < n; ++a) {
                  if (seen[t.rho[b][a]]) {
                    row_ok = false;
                    break;
                  }
                  seen[t.rho[b][a]] = 1;
                }
              }
              if (row_ok && partial_ybe_ok(t, b + 1)) self(self, b + 1);
              int i = n - 1;
              while (i >= 0 && idx[i] + 1 == static_cast<int>(allowed[b][i].size())) idx[i--] = 0;
              if (i < 0) break;
              ++idx[i];
            }
          };
          dfs(dfs, 0);
        }
      }

      int i = n - 1;
      while (i >= 1 && pick[i] + 1 == static_cast<int>(lam_rows.size())) pick[i--] = 0;
      if (i < 1) break;
      ++pick[i];
    }
  }
}

}  // namespace detail

// Exhaustive enumeration of solution tables matching the spec. Emitted
// solutions are re-verified, sorted by table, and (with dedup) restricted to
// canonical representatives of isomorphism classes. The callback sees a
// deterministic stream regardless of the number of jobs.
inline EnumerationSummary enumerate(const SearchSpec& spec,
                                    const std::function<void(const Solution&)>& sink) {
  if (spec.n < 1) throw input_error("enumerate: n must be positive");
  if (spec.n > 4)
    throw resource_error("enumerate: full search beyond n = 4 is not supported");
  if (spec.n == 4 && !(spec.require_involutive && spec.require_lnd))
    throw resource_error("enumerate: n = 4 requires the involutive+lnd pruning constraints");

  const int n = spec.n;
  const bool rho_perms = spec.require_rnd || spec.require_bijective || spec.require_involutive;
  const bool derive_rho = spec.require_involutive && spec.require_lnd;

  long long lam_opts = 1, rho_opts = 1;
  for (int i = 2; i <= n; ++i) lam_opts *= i;  // n!
  for (int i = 0; i < n; ++i) rho_opts *= n;   // n^n
  long long per_lam_row = spec.require_lnd ? lam_opts : rho_opts;
  long long per_rho_row = derive_rho ? 1 : (rho_perms ? lam_opts : rho_opts);
  long long space = 1;
  for (int i = 0; i < n; ++i) {
    if (space > spec.budget / per_lam_row + 1) {
      space = spec.budget + 1;
      break;
    }
    space *= per_lam_row;
  }
  for (int i = 0; i < n && space <= spec.budget; ++i) {
    if (space > spec.budget / per_rho_row + 1) {
      space = spec.budget + 1;
      break;
    }
    space *= per_rho_row;
  }
  if (space > spec.budget) {
    long double exact = 1;
    for (int i = 0; i < n; ++i) exact *= static_cast<long double>(per_lam_row);
    for (int i = 0; i < n; ++i) exact *= static_cast<long double>(per_rho_row);
    std::ostringstream os;
    os << "enumerate: candidate space of " << static_cast<double>(exact)
       << " tables exceeds the budget of " << spec.budget;
    throw resource_error(os.str());
  }

  const int jobs = std::max(1, spec.jobs);
  std::vector<detail::ShardResult> shards(jobs);
  if (jobs == 1) {
    detail::search_shard(spec, 0, 1, shards[0]);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w)
      threads.emplace_back([&spec, w, jobs, &shards] { detail::search_shard(spec, w, jobs, shards[w]); });
    for (std::thread& th : threads) th.join();
  }

  std::vector<Solution> all;
  EnumerationSummary summary;
  summary.space = space;
  for (detail::ShardResult& sh : shards) {
    summary.leaves += sh.leaves;
    summary.raw += sh.raw;
    for (Solution& s : sh.found) all.push_back(std::move(s));
  }
  std::sort(all.begin(), all.end(),
            [](const Solution& a, const Solution& b) { return solution_key(a) < solution_key(b); });

  for (const Solution& s : all) {
    if (!check_ybe(s).valid)
      throw std::logic_error("internal invariant failed: enumerator emitted a non-solution");
    if (spec.dedup && !is_canonical(s)) continue;
    ++summary.emitted;
    ++summary.by_properties[property_key(classify(s))];
    if (sink) sink(s);
  }
  return summary;
}

struct TheoremBAudit {
  long long checked = 0;
  long long counterexamples = 0;
};

// For every left non-degenerate solution on n points: right non-degenerate
// holds exactly when r is bijective. A counterexample is an implementation bug.
inline TheoremBAudit audit_theorem_b(int n, int jobs = 1) {
  SearchSpec spec;
  spec.n = n;
  spec.require_lnd = true;
  spec.jobs = jobs;
  TheoremBAudit audit;
  enumerate(spec, [&audit](const Solution& s) {
    PropertyFlags f = classify(s);
    ++audit.checked;
    if (f.rnd != f.bijective) ++audit.counterexamples;
  });
  if (audit.counterexamples != 0)
    throw std::logic_error("internal invariant failed: rnd <=> bijective has a counterexample");
  return audit;
}

struct InvolutiveDimAudit {
  long long checked = 0;      // bijective non-degenerate solutions examined
  long long max_dim = 0;      // maximum of dim R_2, recorded from the run
  long long maximizers = 0;   // solutions attaining max_dim
  long long involutive = 0;   // involutive solutions
  bool maximizers_are_involutive = false;
};

// dim R_2 over bijective non-degenerate solutions is maximized exactly by the
// involutive ones; the maximum itself is read off the census.
inline InvolutiveDimAudit audit_involutive_dim(int n, int jobs = 1) {
  SearchSpec spec;
  spec.n = n;
  spec.require_lnd = true;
  spec.require_rnd = true;
  spec.require_bijective = true;
  spec.jobs = jobs;

  std::vector<std::pair<long long, bool>> data;  // (dim R_2, involutive)
  enumerate(spec, [&data](const Solution& s) {
    long long dim2 = grow_classes(s, 2, Flavor::multiplicative).dims[2];
    data.emplace_back(dim2, classify(s).involutive);
  });

  InvolutiveDimAudit audit;
  audit.checked = static_cast<long long>(data.size());
  for (auto& [dim, inv] : data) audit.max_dim = std::max(audit.max_dim, dim);
  audit.maximizers_are_involutive = true;
  for (auto& [dim, inv] : data) {
    if (dim == audit.max_dim) ++audit.maximizers;
    if (inv) ++audit.involutive;
    if ((dim == audit.max_dim) != inv) audit.maximizers_are_involutive = false;
  }
  if (!audit.maximizers_are_involutive)
    throw std::logic_error("internal invariant failed: dim R_2 maximizers are not exactly the "
                           "involutive solutions");
  return audit;
}

}  // namespace ybst
