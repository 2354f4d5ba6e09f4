#pragma once

// Shared constructions for the named element families used across the test
// suites.

#include "awlab/admissible.hpp"
#include "awlab/weyl.hpp"

namespace awlab::fixtures {

/// s_from s_{from+1} ... s_to; the identity when from > to.
inline AffWeylElt asc_run(int n, int from, int to) {
  AffWeylElt w = AffWeylElt::identity(n);
  for (int i = from; i <= to; ++i) w = w * AffWeylElt::simple_reflection(n, i);
  return w;
}

/// s_from s_{from-1} ... s_to; the identity when from < to.
inline AffWeylElt desc_run(int n, int from, int to) {
  AffWeylElt w = AffWeylElt::identity(n);
  for (int i = from; i >= to; --i) w = w * AffWeylElt::simple_reflection(n, i);
  return w;
}

/// A' = tau t^{lambda_{0,r}} with tau = (1 2 ... n).
inline AffWeylElt make_A_prime(int n, Int r, Int kappa) {
  const Family f = make_family({n, 0, r, kappa});
  return AffWeylElt::from_finite(Permutation::long_cycle(n)) * AffWeylElt::translation(f.lambda);
}

/// A_j = s_j ... s_2 s_1 A' s_1 s_2 ... s_{j-1}, 1 <= j <= n-1.
inline AffWeylElt make_Aj(int n, Int r, Int kappa, int j) {
  const AffWeylElt a = make_A_prime(n, r, kappa);
  return desc_run(n, j, 1) * a * asc_run(n, 1, j - 1);
}

/// Rung j of the conjugation ladder:
///   s_{j-1}...s_1 w_{0,r} s_1...s_j  ~~  s_{n-j+1}...s_{n-1} w_{0,r} s_{n-1}...s_{n-j}.
inline std::pair<AffWeylElt, AffWeylElt> ladder_rung(int n, Int r, Int kappa, int j) {
  const AffWeylElt w0r = make_family({n, 0, r, kappa}).w;
  const AffWeylElt lhs = desc_run(n, j - 1, 1) * w0r * asc_run(n, 1, j);
  const AffWeylElt rhs = asc_run(n, n - j + 1, n - 1) * w0r * desc_run(n, n - 1, n - j);
  return {lhs, rhs};
}

/// c_j = (1 2 ... j n n-1 ... j+1), the Coxeter twists of lambda_{1,r}.
inline Permutation make_cj(int n, int j) {
  std::vector<int> cyc;
  for (int i = 1; i <= j; ++i) cyc.push_back(i);
  for (int i = n; i >= j + 1; --i) cyc.push_back(i);
  return Permutation::cycle_1b(n, cyc);
}

}  // namespace awlab::fixtures
