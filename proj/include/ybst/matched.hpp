#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ybst/errors.hpp"
#include "ybst/fin_map.hpp"
#include "ybst/semitruss.hpp"
#include "ybst/solution.hpp"

namespace ybst {

struct SystemViolation {
  std::string cond;
  std::vector<int> where;
};

struct SystemReport {
  bool valid = true;
  std::vector<SystemViolation> violations;

  void fail(const char* cond, std::vector<int> where) {
    valid = false;
    violations.push_back({cond, std::move(where)});
  }
};

// Matched product system of YB-semitrusses: alpha[u] acts on carrier(A1),
// beta[a] acts on carrier(A2).
struct MatchedSystemST {
  SemiTruss a1, a2;
  std::vector<Perm> alpha;
  std::vector<Perm> beta;
};

inline void validate_system_shape(int m1, int m2, const std::vector<Perm>& alpha,
                                  const std::vector<Perm>& beta) {
  if (static_cast<int>(alpha.size()) != m2)
    throw input_error("matched system: alpha must have one permutation per element of the second "
                      "factor");
  if (static_cast<int>(beta.size()) != m1)
    throw input_error("matched system: beta must have one permutation per element of the first "
                      "factor");
  for (const Perm& p : alpha)
    if (p.size() != m1) throw input_error("matched system: alpha entry has wrong carrier size");
  for (const Perm& p : beta)
    if (p.size() != m2) throw input_error("matched system: beta entry has wrong carrier size");
}

inline SystemReport validate_system_semitruss(const MatchedSystemST& sys) {
  require_semitruss(sys.a1);
  require_semitruss(sys.a2);
  const int m1 = sys.a1.m, m2 = sys.a2.m;
  validate_system_shape(m1, m2, sys.alpha, sys.beta);

  SystemReport rep;
  std::vector<Perm> alpha_inv, beta_inv;
  for (const Perm& p : sys.alpha) alpha_inv.push_back(p.inverse());
  for (const Perm& p : sys.beta) beta_inv.push_back(p.inverse());

  for (int u = 0; u < m2; ++u)
    for (int a = 0; a < m1; ++a)
      for (int b = 0; b < m1; ++b)
        if (sys.alpha[u](sys.a1.add[a][b]) != sys.a1.add[sys.alpha[u](a)][sys.alpha[u](b)])
          rep.fail("alpha-automorphism", {u, a, b});
  for (int a = 0; a < m1; ++a)
    for (int u = 0; u < m2; ++u)
      for (int v = 0; v < m2; ++v)
        if (sys.beta[a](sys.a2.add[u][v]) != sys.a2.add[sys.beta[a](u)][sys.beta[a](v)])
          rep.fail("beta-automorphism", {a, u, v});
  for (int u = 0; u < m2; ++u)
    for (int v = 0; v < m2; ++v)
      for (int a = 0; a < m1; ++a)
        if (sys.alpha[sys.a2.mul[u][v]](a) != sys.alpha[u](sys.alpha[v](a)))
          rep.fail("alpha-homomorphism", {u, v, a});
  for (int a = 0; a < m1; ++a)
    for (int b = 0; b < m1; ++b)
      for (int u = 0; u < m2; ++u)
        if (sys.beta[sys.a1.mul[a][b]](u) != sys.beta[a](sys.beta[b](u)))
          rep.fail("beta-homomorphism", {a, b, u});

  // lambda^{(1)}_a alpha_{beta_a^{-1}(u)} = alpha_u lambda^{(1)}_{alpha_u^{-1}(a)}
  for (int a = 0; a < m1; ++a)
    for (int u = 0; u < m2; ++u)
      for (int b = 0; b < m1; ++b)
        if (sys.a1.lam[a](sys.alpha[beta_inv[a](u)](b)) !=
            sys.alpha[u](sys.a1.lam[alpha_inv[u](a)](b)))
          rep.fail("lambda-alpha", {a, u, b});
  // lambda^{(2)}_u beta_{alpha_u^{-1}(a)} = beta_a lambda^{(2)}_{beta_a^{-1}(u)}
  for (int u = 0; u < m2; ++u)
    for (int a = 0; a < m1; ++a)
      for (int v = 0; v < m2; ++v)
        if (sys.a2.lam[u](sys.beta[alpha_inv[u](a)](v)) !=
            sys.beta[a](sys.a2.lam[beta_inv[a](u)](v)))
          rep.fail("lambda-beta", {u, a, v});
  // alpha_u sigma^{(1)}_a = sigma^{(1)}_{alpha_u(a)} alpha_u
  for (int u = 0; u < m2; ++u)
    for (int a = 0; a < m1; ++a)
      for (int b = 0; b < m1; ++b)
        if (sys.alpha[u](sys.a1.sig[a](b)) != sys.a1.sig[sys.alpha[u](a)](sys.alpha[u](b)))
          rep.fail("sigma-alpha", {u, a, b});
  // beta_a sigma^{(2)}_u = sigma^{(2)}_{beta_a(u)} beta_a
  for (int a = 0; a < m1; ++a)
    for (int u = 0; u < m2; ++u)
      for (int v = 0; v < m2; ++v)
        if (sys.beta[a](sys.a2.sig[u](v)) != sys.a2.sig[sys.beta[a](u)](sys.beta[a](v)))
          rep.fail("sigma-beta", {a, u, v});

  return rep;
}

// Matched product semitruss on A1 x A2, carrier index a*|A2| + u.
inline SemiTruss matched_product_semitruss(const MatchedSystemST& sys) {
  SystemReport val = validate_system_semitruss(sys);
  if (!val.valid)
    throw precondition_error("matched system invalid: " + val.violations.front().cond);

  const int m1 = sys.a1.m, m2 = sys.a2.m, m = m1 * m2;
  std::vector<Perm> alpha_inv, beta_inv;
  for (const Perm& p : sys.alpha) alpha_inv.push_back(p.inverse());
  for (const Perm& p : sys.beta) beta_inv.push_back(p.inverse());
  auto id = [m2](int a, int u) { return a * m2 + u; };

  SemiTruss t;
  t.m = m;
  t.add.assign(m, std::vector<int>(m));
  t.mul.assign(m, std::vector<int>(m));
  for (int a = 0; a < m1; ++a)
    for (int u = 0; u < m2; ++u) {
      std::vector<int> lrow(m), srow(m);
      for (int b = 0; b < m1; ++b)
        for (int v = 0; v < m2; ++v) {
          t.add[id(a, u)][id(b, v)] = id(sys.a1.add[a][b], sys.a2.add[u][v]);
          t.mul[id(a, u)][id(b, v)] =
              id(sys.alpha[u](sys.a1.mul[alpha_inv[u](a)][b]),
                 sys.beta[a](sys.a2.mul[beta_inv[a](u)][v]));
          lrow[id(b, v)] = id(sys.a1.lam[a](sys.alpha[beta_inv[a](u)](b)),
                              sys.a2.lam[u](sys.beta[alpha_inv[u](a)](v)));
          srow[id(b, v)] = id(sys.a1.sig[a](b), sys.a2.sig[u](v));
        }
      t.lam.emplace_back(m, std::move(lrow));
      t.sig.emplace_back(m, std::move(srow));
    }
  if (sys.a1.unit && sys.a2.unit) t.unit = id(*sys.a1.unit, *sys.a2.unit);

  AxiomReport rep = verify_semitruss(t);
  if (!rep.pass())
    throw std::logic_error("internal invariant failed: matched product is not a YB-semitruss (" +
                           describe_failed_axiom(rep) + ")");
  return t;
}

// Matched product system of solutions: alpha[u] in Sym(S), beta[a] in Sym(T).
struct MatchedSystemSol {
  Solution rs, rt;
  std::vector<Perm> alpha;
  std::vector<Perm> beta;
};

inline SystemReport validate_system_solutions(const MatchedSystemSol& sys) {
  if (!check_ybe(sys.rs).valid || !check_ybe(sys.rt).valid)
    throw precondition_error("matched system: both factors must satisfy the YBE");
  const int ns = sys.rs.n, nt = sys.rt.n;
  validate_system_shape(ns, nt, sys.alpha, sys.beta);

  SystemReport rep;
  std::vector<Perm> ainv, binv;
  for (const Perm& p : sys.alpha) ainv.push_back(p.inverse());
  for (const Perm& p : sys.beta) binv.push_back(p.inverse());
  const auto& lamS = sys.rs.lam;
  const auto& rhoS = sys.rs.rho;
  const auto& lamT = sys.rt.lam;
  const auto& rhoT = sys.rt.rho;

  for (int u = 0; u < nt; ++u)
    for (int v = 0; v < nt; ++v)
      for (int a = 0; a < ns; ++a)
        if (sys.alpha[u](sys.alpha[v](a)) != sys.alpha[lamT[u](v)](sys.alpha[rhoT[v](u)](a)))
          rep.fail("s1", {u, v, a});
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      for (int u = 0; u < nt; ++u)
        if (sys.beta[a](sys.beta[b](u)) != sys.beta[lamS[a](b)](sys.beta[rhoS[b](a)](u)))
          rep.fail("s2", {a, b, u});
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      for (int u = 0; u < nt; ++u)
        if (rhoS[ainv[u](b)](ainv[sys.beta[a](u)](a)) !=
            ainv[sys.beta[rhoS[b](a)](binv[b](u))](rhoS[b](a)))
          rep.fail("s3", {a, b, u});
  for (int u = 0; u < nt; ++u)
    for (int v = 0; v < nt; ++v)
      for (int a = 0; a < ns; ++a)
        if (rhoT[binv[a](v)](binv[sys.alpha[u](a)](u)) !=
            binv[sys.alpha[rhoT[v](u)](ainv[v](a))](rhoT[v](u)))
          rep.fail("s4", {u, v, a});
  for (int a = 0; a < ns; ++a)
    for (int u = 0; u < nt; ++u)
      for (int b = 0; b < ns; ++b)
        if (lamS[a](sys.alpha[binv[a](u)](b)) != sys.alpha[u](lamS[ainv[u](a)](b)))
          rep.fail("s5", {a, u, b});
  for (int u = 0; u < nt; ++u)
    for (int a = 0; a < ns; ++a)
      for (int v = 0; v < nt; ++v)
        if (lamT[u](sys.beta[ainv[u](a)](v)) != sys.beta[a](lamT[binv[a](u)](v)))
          rep.fail("s6", {u, a, v});

  return rep;
}

// Matched product of the two solutions on S x T, carrier index a*|T| + u.
inline Solution matched_product_solutions(const MatchedSystemSol& sys) {
  SystemReport val = validate_system_solutions(sys);
  if (!val.valid)
    throw precondition_error("matched system invalid: " + val.violations.front().cond);

  const int ns = sys.rs.n, nt = sys.rt.n, n = ns * nt;
  std::vector<Perm> ainv, binv;
  for (const Perm& p : sys.alpha) ainv.push_back(p.inverse());
  for (const Perm& p : sys.beta) binv.push_back(p.inverse());
  auto id = [nt](int a, int u) { return a * nt + u; };

  std::vector<std::vector<int>> lam(n, std::vector<int>(n)), rho(n, std::vector<int>(n));
  for (int a = 0; a < ns; ++a)
    for (int u = 0; u < nt; ++u)
      for (int b = 0; b < ns; ++b)
        for (int v = 0; v < nt; ++v) {
          int abar = ainv[u](a);
          int ubar = binv[a](u);
          int A = sys.alpha[u](sys.rs.lam[abar](b));
          int U = sys.beta[a](sys.rt.lam[ubar](v));
          int Abar = ainv[U](A);
          int Ubar = binv[A](U);
          int second_s = ainv[Ubar](sys.rs.rho[sys.alpha[ubar](b)](a));
          int second_t = binv[Abar](sys.rt.rho[sys.beta[abar](v)](u));
          lam[id(a, u)][id(b, v)] = id(A, U);
          rho[id(b, v)][id(a, u)] = id(second_s, second_t);
        }

  Solution r;
  r.n = n;
  for (int i = 0; i < n; ++i) {
    r.lam.emplace_back(n, std::move(lam[i]));
    r.rho.emplace_back(n, std::move(rho[i]));
  }
  if (!check_ybe(r).valid)
    throw std::logic_error("internal invariant failed: matched product of solutions fails YBE");
  return r;
}

// The solution-level system induced by a semitruss-level system.
inline MatchedSystemSol induced_solution_system(const MatchedSystemST& sys) {
  return MatchedSystemSol{associated_solution(sys.a1), associated_solution(sys.a2), sys.alpha,
                          sys.beta};
}

}  // namespace ybst
