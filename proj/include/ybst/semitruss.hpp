#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybst/errors.hpp"
#include "ybst/fin_map.hpp"
#include "ybst/solution.hpp"

namespace ybst {

using Table = std::vector<std::vector<int>>;

// Finite YB-semitruss (A, +, o, lambda, sigma): add/mul are the two
// operation tables, lam[a] = lambda_a (bijective by construction),
// sig[a] = sigma_a. The rho-map is always derived, never stored.
struct SemiTruss {
  int m = 0;
  Table add;
  Table mul;
  std::vector<Perm> lam;
  std::vector<FinMap> sig;
  std::optional<int> unit;
};

inline void validate_table(const Table& t, int m, const char* name) {
  if (static_cast<int>(t.size()) != m)
    throw input_error(std::string(name) + ": expected " + std::to_string(m) + " rows");
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != m)
      throw input_error(std::string(name) + ": ragged row");
    for (int v : row)
      if (v < 0 || v >= m)
        throw input_error(std::string(name) + ": entry " + std::to_string(v) + " out of range");
  }
}

inline void validate_semitruss(const SemiTruss& t) {
  if (t.m <= 0) throw input_error("semitruss: carrier must be non-empty");
  validate_table(t.add, t.m, "add");
  validate_table(t.mul, t.m, "mul");
  if (static_cast<int>(t.lam.size()) != t.m || static_cast<int>(t.sig.size()) != t.m)
    throw input_error("semitruss: need m lambda rows and m sigma rows");
  for (const Perm& p : t.lam)
    if (p.size() != t.m) throw input_error("semitruss: lambda row has wrong carrier size");
  for (const FinMap& f : t.sig)
    if (f.size() != t.m) throw input_error("semitruss: sigma row has wrong carrier size");
  if (t.unit) {
    int u = *t.unit;
    if (u < 0 || u >= t.m) throw input_error("semitruss: unit index out of range");
    for (int a = 0; a < t.m; ++a)
      if (t.add[u][a] != a || t.add[a][u] != a || t.mul[u][a] != a || t.mul[a][u] != a)
        throw input_error("semitruss: declared unit is not a two-sided identity of both tables");
  }
}

struct AxiomCheck {
  bool ok = true;
  std::array<int, 3> witness{-1, -1, -1};  // first failing tuple; unused slots are -1

  void fail(int a, int b, int c) {
    if (ok) witness = {a, b, c};
    ok = false;
  }
};

struct AxiomReport {
  AxiomCheck add_assoc;
  AxiomCheck mul_assoc;
  AxiomCheck lambda_hom;     // lambda_a in Aut(A,+) and lambda_a lambda_b = lambda_{a o b}
  AxiomCheck sumcirc;        // a + lambda_a(b) = a o b
  AxiomCheck csum;           // a + b = b + sigma_b(a)
  AxiomCheck sigma_antihom;  // sigma_a in End(A,+) and sigma_{a+b} = sigma_b sigma_a
  AxiomCheck sigma_lambda;   // sigma_{lambda_a(d)} lambda_a(b) = lambda_a sigma_d(b)
  AxiomCheck condc1;         // consequence: sigma_a sigma_b = sigma_{sigma_a(b)} sigma_a

  bool unit_declared = false;
  AxiomCheck unital_shared_identity;  // lambda_1 = sigma_1 = id and lambda_a(1) = 1
  AxiomCheck unital_sigma_fixes_unit;  // sigma_a(1) = 1

  bool core_pass() const {
    return add_assoc.ok && mul_assoc.ok && lambda_hom.ok && sumcirc.ok && csum.ok &&
           sigma_antihom.ok && sigma_lambda.ok && condc1.ok;
  }
  bool pass() const {
    return core_pass() &&
           (!unit_declared || (unital_shared_identity.ok && unital_sigma_fixes_unit.ok));
  }
};

// Detects whether a table is a group table; returns the identity if so.
inline std::optional<int> group_identity(const Table& t) {
  const int m = static_cast<int>(t.size());
  int e = -1;
  for (int cand = 0; cand < m; ++cand) {
    bool id = true;
    for (int a = 0; a < m; ++a)
      if (t[cand][a] != a || t[a][cand] != a) {
        id = false;
        break;
      }
    if (id) {
      e = cand;
      break;
    }
  }
  if (e < 0) return std::nullopt;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return std::nullopt;
  for (int a = 0; a < m; ++a) {
    bool has_inv = false;
    for (int b = 0; b < m; ++b)
      if (t[a][b] == e && t[b][a] == e) {
        has_inv = true;
        break;
      }
    if (!has_inv) return std::nullopt;
  }
  return e;
}

inline AxiomReport verify_semitruss(const SemiTruss& t) {
  validate_semitruss(t);
  const int m = t.m;
  AxiomReport rep;

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int d = 0; d < m; ++d) {
        if (t.add[t.add[a][b]][d] != t.add[a][t.add[b][d]]) rep.add_assoc.fail(a, b, d);
        if (t.mul[t.mul[a][b]][d] != t.mul[a][t.mul[b][d]]) rep.mul_assoc.fail(a, b, d);
        if (t.lam[a](t.add[b][d]) != t.add[t.lam[a](b)][t.lam[a](d)]) rep.lambda_hom.fail(a, b, d);
        if (t.lam[a](t.lam[b](d)) != t.lam[t.mul[a][b]](d)) rep.lambda_hom.fail(a, b, d);
        if (t.sig[a](t.add[b][d]) != t.add[t.sig[a](b)][t.sig[a](d)]) rep.sigma_antihom.fail(a, b, d);
        if (t.sig[t.add[a][b]](d) != t.sig[b](t.sig[a](d))) rep.sigma_antihom.fail(a, b, d);
        if (t.sig[t.lam[a](d)](t.lam[a](b)) != t.lam[a](t.sig[d](b))) rep.sigma_lambda.fail(a, b, d);
        if (t.sig[a](t.sig[b](d)) != t.sig[t.sig[a](b)](t.sig[a](d))) rep.condc1.fail(a, b, d);
      }

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (t.add[a][t.lam[a](b)] != t.mul[a][b]) rep.sumcirc.fail(a, b, -1);
      if (t.add[a][b] != t.add[b][t.sig[b](a)]) rep.csum.fail(a, b, -1);
    }

  if (t.unit) {
    rep.unit_declared = true;
    const int u = *t.unit;
    if (!t.lam[u].is_identity()) rep.unital_shared_identity.fail(u, -1, -1);
    if (!t.sig[u].is_identity()) rep.unital_shared_identity.fail(u, -1, -1);
    for (int a = 0; a < m; ++a) {
      if (t.lam[a](u) != u) rep.unital_shared_identity.fail(a, -1, -1);
      if (t.sig[a](u) != u) rep.unital_sigma_fixes_unit.fail(a, -1, -1);
    }
  }

  // (A,+) a group forces (A,o) to be a group.
  if (rep.core_pass() && group_identity(t.add) && !group_identity(t.mul))
    throw std::logic_error("internal invariant failed: additive group without multiplicative group");

  return rep;
}

inline std::string describe_failed_axiom(const AxiomReport& rep) {
  auto w = [](const AxiomCheck& c) {
    return " at (" + std::to_string(c.witness[0]) + "," + std::to_string(c.witness[1]) + "," +
           std::to_string(c.witness[2]) + ")";
  };
  if (!rep.add_assoc.ok) return "addition not associative" + w(rep.add_assoc);
  if (!rep.mul_assoc.ok) return "multiplication not associative" + w(rep.mul_assoc);
  if (!rep.lambda_hom.ok) return "lambda is not a homomorphism into Aut(A,+)" + w(rep.lambda_hom);
  if (!rep.sumcirc.ok) return "a + lambda_a(b) = a o b fails" + w(rep.sumcirc);
  if (!rep.csum.ok) return "a + b = b + sigma_b(a) fails" + w(rep.csum);
  if (!rep.sigma_antihom.ok)
    return "sigma is not an anti-homomorphism into End(A,+)" + w(rep.sigma_antihom);
  if (!rep.sigma_lambda.ok) return "sigma/lambda compatibility fails" + w(rep.sigma_lambda);
  if (!rep.condc1.ok) return "derived identity condc1 fails" + w(rep.condc1);
  return "all axioms hold";
}

inline void require_semitruss(const SemiTruss& t) {
  AxiomReport rep = verify_semitruss(t);
  if (!rep.core_pass()) throw precondition_error("not a YB-semitruss: " + describe_failed_axiom(rep));
}

// rho_b(a) = lambda^{-1}_{lambda_a(b)} sigma_{lambda_a(b)}(a).
inline std::vector<FinMap> rho_map(const SemiTruss& t) {
  const int m = t.m;
  std::vector<Perm> lam_inv;
  lam_inv.reserve(m);
  for (int a = 0; a < m; ++a) lam_inv.push_back(t.lam[a].inverse());
  std::vector<FinMap> rho;
  rho.reserve(m);
  for (int b = 0; b < m; ++b) {
    std::vector<int> row(m);
    for (int a = 0; a < m; ++a) {
      int c = t.lam[a](b);
      row[a] = lam_inv[c](t.sig[c](a));
    }
    rho.emplace_back(m, std::move(row));
  }
  return rho;
}

// r_A(a,b) = (lambda_a(b), rho_b(a)); verified against the YBE and against the
// conjugation identity r_A = phi^{-1} s_A phi with phi(a,b) = (a, lambda_a(b)).
inline Solution associated_solution(const SemiTruss& t) {
  require_semitruss(t);
  Solution r;
  r.n = t.m;
  for (const Perm& p : t.lam) r.lam.push_back(p);
  r.rho = rho_map(t);
  if (!check_ybe(r).valid)
    throw std::logic_error("internal invariant failed: associated solution fails YBE");

  for (int a = 0; a < t.m; ++a)
    for (int b = 0; b < t.m; ++b) {
      int u = a, v = t.lam[a](b);          // phi
      std::pair<int, int> sv{v, t.sig[v](u)};  // s_A
      std::pair<int, int> back{sv.first, t.lam[sv.first].inverse()(sv.second)};  // phi^{-1}
      if (back != r.apply(a, b))
        throw std::logic_error("internal invariant failed: conjugation identity r = phi^{-1} s phi");
    }
  return r;
}

// s_A(a,b) = (b, sigma_b(a)).
inline Solution associated_derived(const SemiTruss& t) {
  require_semitruss(t);
  Solution s;
  s.n = t.m;
  s.lam.assign(t.m, FinMap::identity(t.m));
  s.rho = t.sig;
  if (!check_ybe(s).valid)
    throw std::logic_error("internal invariant failed: associated derived solution fails YBE");
  detail::require_solution_equal(s, derived_solution(associated_solution(t)),
                                 "associated derived solution must equal the derived solution of "
                                 "the associated solution");
  return s;
}

// Opposite YB-semitruss (A, +^op, o, sigma^{-1} lambda, sigma^{-1}); its
// associated solution is the inverse of the input's.
inline SemiTruss opposite(const SemiTruss& t) {
  require_semitruss(t);
  for (int a = 0; a < t.m; ++a)
    if (!t.sig[a].is_permutation())
      throw precondition_error("no opposite: sigma_" + std::to_string(a) + " not invertible");

  SemiTruss op;
  op.m = t.m;
  op.add.assign(t.m, std::vector<int>(t.m));
  for (int a = 0; a < t.m; ++a)
    for (int b = 0; b < t.m; ++b) op.add[a][b] = t.add[b][a];
  op.mul = t.mul;
  for (int a = 0; a < t.m; ++a) {
    Perm sig_inv = Perm(t.sig[a]).inverse();
    op.lam.emplace_back(sig_inv.after(t.lam[a]));
    op.sig.push_back(sig_inv);
  }
  op.unit = t.unit;

  AxiomReport rep = verify_semitruss(op);
  if (!rep.pass())
    throw std::logic_error("internal invariant failed: opposite is not a YB-semitruss (" +
                           describe_failed_axiom(rep) + ")");
  detail::require_solution_equal(associated_solution(op), inverse_solution(associated_solution(t)),
                                 "associated solution of the opposite must be the inverse solution");
  return op;
}

struct IdempotentReport {
  std::vector<int> eplus;   // {e : e + e = e}
  std::vector<int> ecirc;   // {e : e o e = e}
  bool lambda_id_on_ecirc = false;
  bool sigma_idem_on_eplus = false;
  bool ecirc_subset_eplus = false;
  bool eplus_closed = false;  // under +, o and lambda/sigma images
  bool ecirc_closed = false;  // under o, + and lambda images
  bool commutativity_applicable = false;  // associated solution bijective
  bool commutative = false;
};

inline IdempotentReport idempotent_sets(const SemiTruss& t) {
  require_semitruss(t);
  const int m = t.m;
  IdempotentReport rep;
  std::vector<char> in_plus(m, 0), in_circ(m, 0);
  for (int e = 0; e < m; ++e) {
    if (t.add[e][e] == e) {
      in_plus[e] = 1;
      rep.eplus.push_back(e);
    }
    if (t.mul[e][e] == e) {
      in_circ[e] = 1;
      rep.ecirc.push_back(e);
    }
  }

  rep.lambda_id_on_ecirc = true;
  for (int e : rep.ecirc)
    if (!t.lam[e].is_identity()) rep.lambda_id_on_ecirc = false;

  rep.sigma_idem_on_eplus = true;
  for (int e : rep.eplus)
    if (!t.sig[e].is_idempotent()) rep.sigma_idem_on_eplus = false;

  rep.ecirc_subset_eplus = true;
  for (int e : rep.ecirc)
    if (!in_plus[e]) rep.ecirc_subset_eplus = false;

  rep.eplus_closed = true;
  for (int e : rep.eplus) {
    for (int f : rep.eplus)
      if (!in_plus[t.add[e][f]] || !in_plus[t.mul[e][f]]) rep.eplus_closed = false;
    for (int a = 0; a < m; ++a)
      if (!in_plus[t.lam[a](e)] || !in_plus[t.sig[a](e)]) rep.eplus_closed = false;
  }

  rep.ecirc_closed = true;
  for (int e : rep.ecirc)
    for (int f : rep.ecirc)
      if (!in_circ[t.mul[e][f]] || !in_circ[t.add[e][f]] || !in_circ[t.lam[e](f)])
        rep.ecirc_closed = false;

  bool bij = true;
  for (const FinMap& s : t.sig)
    if (!s.is_permutation()) bij = false;
  rep.commutativity_applicable = bij;
  if (bij) {
    rep.commutative = true;
    for (int e : rep.eplus)
      for (int f : rep.eplus)
        if (t.add[e][f] != t.add[f][e]) rep.commutative = false;
    for (int e : rep.ecirc)
      for (int f : rep.ecirc)
        if (t.mul[e][f] != t.mul[f][e]) rep.commutative = false;
  }

  if (!rep.lambda_id_on_ecirc || !rep.sigma_idem_on_eplus || !rep.ecirc_subset_eplus ||
      !rep.eplus_closed || !rep.ecirc_closed || (rep.commutativity_applicable && !rep.commutative))
    throw std::logic_error("internal invariant failed: idempotent structure violates established "
                           "properties of YB-semitrusses");
  return rep;
}

// Skew left brace (A,+,o): both tables groups, a o (b+d) = a o b - a + a o d.
// lambda_a(b) = -a + a o b, sigma_b(a) = -b + a + b.
inline SemiTruss from_skew_brace(const Table& add, const Table& mul) {
  const int m = static_cast<int>(add.size());
  validate_table(add, m, "add");
  validate_table(mul, m, "mul");
  std::optional<int> e_add = group_identity(add);
  std::optional<int> e_mul = group_identity(mul);
  if (!e_add) throw precondition_error("not a skew brace: addition is not a group table");
  if (!e_mul) throw precondition_error("not a skew brace: multiplication is not a group table");
  if (*e_add != *e_mul)
    throw precondition_error("not a skew brace: additive and multiplicative identities differ");

  std::vector<int> neg(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (add[a][b] == *e_add) neg[a] = b;

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int d = 0; d < m; ++d)
        if (mul[a][add[b][d]] != add[add[mul[a][b]][neg[a]]][mul[a][d]])
          throw precondition_error("not a skew brace: a o (b+d) = a o b - a + a o d fails at (" +
                                   std::to_string(a) + "," + std::to_string(b) + "," +
                                   std::to_string(d) + ")");

  SemiTruss t;
  t.m = m;
  t.add = add;
  t.mul = mul;
  t.unit = *e_add;
  for (int a = 0; a < m; ++a) {
    std::vector<int> lrow(m), srow(m);
    for (int b = 0; b < m; ++b) {
      lrow[b] = add[neg[a]][mul[a][b]];
      srow[b] = add[add[neg[a]][b]][a];
    }
    t.lam.emplace_back(m, std::move(lrow));
    t.sig.emplace_back(m, std::move(srow));
  }

  AxiomReport rep = verify_semitruss(t);
  if (!rep.pass())
    throw std::logic_error("internal invariant failed: skew brace did not verify (" +
                           describe_failed_axiom(rep) + ")");
  PropertyFlags flags = classify(associated_solution(t));
  if (!flags.lnd || !flags.rnd || !flags.bijective)
    throw std::logic_error("internal invariant failed: skew brace solution must be bijective "
                           "non-degenerate");
  return t;
}

// Left cancellative semi-brace: (A,+) left cancellative semigroup, (A,o) a
// group, a o (b+d) = a o b + a o (a^- + d). lambda_a(b) = a o (a^- + b),
// sigma_b(a) = lambda_b(b^-) + a + b.
inline SemiTruss from_semibrace(const Table& add, const Table& mul) {
  const int m = static_cast<int>(add.size());
  validate_table(add, m, "add");
  validate_table(mul, m, "mul");

  for (int a = 0; a < m; ++a) {
    std::vector<char> seen(m, 0);
    for (int b = 0; b < m; ++b) {
      if (seen[add[a][b]])
        throw precondition_error("not a left cancellative semi-brace: addition row " +
                                 std::to_string(a) + " is not left cancellative");
      seen[add[a][b]] = 1;
    }
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int d = 0; d < m; ++d)
        if (add[add[a][b]][d] != add[a][add[b][d]])
          throw precondition_error("not a semi-brace: addition not associative");

  std::optional<int> e = group_identity(mul);
  if (!e) throw precondition_error("not a semi-brace: multiplication is not a group table");
  std::vector<int> inv(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (mul[a][b] == *e) inv[a] = b;

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int d = 0; d < m; ++d)
        if (mul[a][add[b][d]] != add[mul[a][b]][mul[a][add[inv[a]][d]]])
          throw precondition_error("not a semi-brace: a o (b+d) = a o b + a o (a^- + d) fails at (" +
                                   std::to_string(a) + "," + std::to_string(b) + "," +
                                   std::to_string(d) + ")");

  SemiTruss t;
  t.m = m;
  t.add = add;
  t.mul = mul;
  for (int a = 0; a < m; ++a) {
    std::vector<int> lrow(m);
    for (int b = 0; b < m; ++b) lrow[b] = mul[a][add[inv[a]][b]];
    t.lam.emplace_back(m, std::move(lrow));
  }
  for (int b = 0; b < m; ++b) {
    std::vector<int> srow(m);
    for (int a = 0; a < m; ++a) srow[a] = add[add[t.lam[b](inv[b])][a]][b];
    t.sig.emplace_back(m, std::move(srow));
  }
  // The multiplicative identity is an identity of (A,+) only when two-sided;
  // declare the unit in that case alone.
  bool two_sided = true;
  for (int a = 0; a < m; ++a)
    if (add[*e][a] != a || add[a][*e] != a) two_sided = false;
  if (two_sided) t.unit = *e;

  AxiomReport rep = verify_semitruss(t);
  if (!rep.pass())
    throw std::logic_error("internal invariant failed: semi-brace did not verify (" +
                           describe_failed_axiom(rep) + ")");
  return t;
}

struct HomReport {
  bool add_ok = true, mul_ok = true, lambda_ok = true, sigma_ok = true;
  std::array<int, 2> witness{-1, -1};
  bool surjective = false;
  bool rho_checked = false;
  bool rho_ok = true;

  bool pass() const { return add_ok && mul_ok && lambda_ok && sigma_ok && (!rho_checked || rho_ok); }
};

// Checks whether f respects +, o, lambda and sigma; for surjective f the
// derived rho-compatibility is checked as well.
inline HomReport check_homomorphism(const SemiTruss& t1, const SemiTruss& t2, const FinMap& f) {
  validate_semitruss(t1);
  validate_semitruss(t2);
  if (f.size() != t1.m) throw input_error("homomorphism: map domain size mismatch");
  for (int v : f.table())
    if (v < 0 || v >= t2.m) throw input_error("homomorphism: map image out of range");

  HomReport rep;
  auto note = [&rep](bool& flag, int a, int b) {
    if (rep.pass()) rep.witness = {a, b};
    flag = false;
  };
  for (int a = 0; a < t1.m; ++a)
    for (int b = 0; b < t1.m; ++b) {
      if (f(t1.add[a][b]) != t2.add[f(a)][f(b)]) note(rep.add_ok, a, b);
      if (f(t1.mul[a][b]) != t2.mul[f(a)][f(b)]) note(rep.mul_ok, a, b);
      if (f(t1.lam[a](b)) != t2.lam[f(a)](f(b))) note(rep.lambda_ok, a, b);
      if (f(t1.sig[b](a)) != t2.sig[f(b)](f(a))) note(rep.sigma_ok, a, b);
    }

  std::vector<char> hit(t2.m, 0);
  for (int v : f.table()) hit[v] = 1;
  rep.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });

  if (rep.surjective) {
    rep.rho_checked = true;
    std::vector<FinMap> rho1 = rho_map(t1), rho2 = rho_map(t2);
    for (int a = 0; a < t1.m; ++a)
      for (int b = 0; b < t1.m; ++b)
        if (rho2[f(a)](f(b)) != f(rho1[a](b))) note(rep.rho_ok, a, b);
  }
  return rep;
}

struct SemiTrussRetract {
  SemiTruss g;
  FinMap proj;
  // Every audit item below is guaranteed by the retract construction; a false
  // value would indicate an implementation bug and throws instead.
  bool well_defined = true;
  bool epimorphism = true;
  bool g_nondegenerate = true;
  bool g_mul_cancellative = true;
  bool sigma_determined_by_pair = true;  // lambda_a=lambda_b, rho_a=rho_b => sigma_a=sigma_b
  bool skew_brace_condition = false;
  bool g_is_skew_brace = false;
};

// Quotient by equality of the triples (sigma_a, lambda_a, rho_a).
inline SemiTrussRetract retract_semitruss(const SemiTruss& t) {
  require_semitruss(t);
  std::vector<FinMap> rho = rho_map(t);
  for (int b = 0; b < t.m; ++b)
    if (!rho[b].is_permutation())
      throw precondition_error("retract requires a non-degenerate semitruss: rho_" +
                               std::to_string(b) + " is not bijective");

  const int m = t.m;
  std::vector<int> cls(m, -1);
  std::vector<int> reps;
  for (int a = 0; a < m; ++a) {
    for (int r : reps)
      if (t.sig[a] == t.sig[r] && t.lam[a] == t.lam[r] && rho[a] == rho[r]) {
        cls[a] = cls[r];
        break;
      }
    if (cls[a] < 0) {
      cls[a] = static_cast<int>(reps.size());
      reps.push_back(a);
    }
  }
  const int k = static_cast<int>(reps.size());

  SemiTrussRetract res;
  res.g.m = k;
  res.g.add.assign(k, std::vector<int>(k));
  res.g.mul.assign(k, std::vector<int>(k));
  for (int c = 0; c < k; ++c) {
    std::vector<int> lrow(k), srow(k);
    for (int d = 0; d < k; ++d) {
      res.g.add[c][d] = cls[t.add[reps[c]][reps[d]]];
      res.g.mul[c][d] = cls[t.mul[reps[c]][reps[d]]];
      lrow[d] = cls[t.lam[reps[c]](reps[d])];
      srow[d] = cls[t.sig[reps[c]](reps[d])];
    }
    res.g.lam.emplace_back(k, std::move(lrow));
    res.g.sig.emplace_back(k, std::move(srow));
  }
  if (t.unit) res.g.unit = cls[*t.unit];
  res.proj = FinMap(m, cls);

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (cls[t.add[a][b]] != res.g.add[cls[a]][cls[b]] ||
          cls[t.mul[a][b]] != res.g.mul[cls[a]][cls[b]] ||
          cls[t.lam[a](b)] != res.g.lam[cls[a]](cls[b]) ||
          cls[t.sig[a](b)] != res.g.sig[cls[a]](cls[b]))
        res.well_defined = false;
  if (!res.well_defined)
    throw std::logic_error("internal invariant failed: retract operations depend on representatives");

  AxiomReport grep = verify_semitruss(res.g);
  if (!grep.core_pass())
    throw std::logic_error("internal invariant failed: retract is not a YB-semitruss (" +
                           describe_failed_axiom(grep) + ")");

  res.epimorphism = check_homomorphism(t, res.g, res.proj).pass();
  PropertyFlags gflags = classify(associated_solution(res.g));
  res.g_nondegenerate = gflags.lnd && gflags.rnd;

  for (int a = 0; a < k; ++a) {
    std::vector<char> row(k, 0), col(k, 0);
    for (int b = 0; b < k; ++b) {
      if (row[res.g.mul[a][b]]) res.g_mul_cancellative = false;
      row[res.g.mul[a][b]] = 1;
      if (col[res.g.mul[b][a]]) res.g_mul_cancellative = false;
      col[res.g.mul[b][a]] = 1;
    }
  }

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (t.lam[a] == t.lam[b] && rho[a] == rho[b] && !(t.sig[a] == t.sig[b]))
        res.sigma_determined_by_pair = false;

  if (!res.epimorphism || !res.g_nondegenerate || !res.g_mul_cancellative ||
      !res.sigma_determined_by_pair)
    throw std::logic_error("internal invariant failed: retract audit found a guaranteed property "
                           "violated");

  res.skew_brace_condition = true;
  for (int a = 0; a < m && res.skew_brace_condition; ++a) {
    bool found = false;
    for (int b = 0; b < m; ++b)
      if (t.lam[a].after(t.lam[b]).is_identity() && rho[b].after(rho[a]).is_identity()) {
        found = true;
        break;
      }
    if (!found) res.skew_brace_condition = false;
  }
  if (res.skew_brace_condition) {
    res.g_is_skew_brace =
        group_identity(res.g.add).has_value() && group_identity(res.g.mul).has_value();
    if (!res.g_is_skew_brace)
      throw std::logic_error("internal invariant failed: retract should be a skew brace when all "
                             "lambda/rho pairs are invertible");
  }
  return res;
}

}  // namespace ybst
