#pragma once

// Alcove geometry for GL_n: the projections p1, p2 onto W_0, Newton vectors,
// the Kottwitz homomorphism, dominance order and basic sigma-conjugacy
// classes. All arithmetic is exact (integers and rationals).

#include <boost/rational.hpp>
#include <numeric>
#include <vector>

#include "awlab/weyl.hpp"

namespace awlab {

using Rat = boost::rational<Int>;
using RationalVector = std::vector<Rat>;

inline RationalVector to_rational(const Cocharacter& lam) {
  RationalVector r;
  r.reserve(static_cast<size_t>(lam.n()));
  for (int i = 0; i < lam.n(); ++i) r.emplace_back(lam[i]);
  return r;
}

/// Projection onto the finite part: p1(t^lambda u) = u.
inline Permutation p1(const AffWeylElt& w) { return w.finite; }

/// The unique v in W_0 with v^{-1} (w . a) in the dominant chamber, where a
/// is the base alcove {x_1 > x_2 > ... > x_n > x_1 - 1}. Evaluated at the
/// interior point p_i = (n-i)/(2n) (1-based), scaled to integers: the image
/// point has coordinates 2n*lambda_i + (n-1) - u^{-1}(i), which are pairwise
/// distinct, so the sorting permutation is unique.
inline Permutation p2(const AffWeylElt& w) {
  const int n = w.n();
  const Permutation uinv = w.finite.inverse();
  std::vector<Int> q(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    q[static_cast<size_t>(i)] = 2 * static_cast<Int>(n) * w.transl[i] + (n - 1 - uinv(i));
  std::vector<int> idx(static_cast<size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return q[static_cast<size_t>(a)] > q[static_cast<size_t>(b)];
  });
  for (size_t i = 0; i + 1 < idx.size(); ++i)
    if (q[static_cast<size_t>(idx[i])] == q[static_cast<size_t>(idx[i + 1])])
      throw internal_error("p2: image point lies on a wall");
  return Permutation::from_one_line(std::move(idx));
}

/// Kottwitz invariant kappa(t^lambda u) = sum of lambda.
inline Int kottwitz(const AffWeylElt& w) { return w.transl.sum(); }

/// Newton vector: average the translation part over each cycle of the
/// finite part, then sort decreasingly.
inline RationalVector newton(const AffWeylElt& w) {
  RationalVector r(static_cast<size_t>(w.n()));
  for (const auto& cyc : w.finite.cycles()) {
    Int s = 0;
    for (int i : cyc) s += w.transl[i];
    const Rat avg(s, static_cast<Int>(cyc.size()));
    for (int i : cyc) r[static_cast<size_t>(i)] = avg;
  }
  std::sort(r.begin(), r.end(), std::greater<>());
  return r;
}

/// Dominance order on dominant rational vectors: equal sums and every prefix
/// sum of a is <= the prefix sum of b.
inline bool dominance_leq(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw guard_error("rank mismatch in dominance_leq");
  for (size_t i = 0; i + 1 < a.size(); ++i)
    if (a[i] < a[i + 1] || b[i] < b[i + 1]) throw guard_error("dominance_leq requires dominant arguments");
  Rat pa(0), pb(0);
  for (size_t i = 0; i < a.size(); ++i) {
    pa += a[i];
    pb += b[i];
    if (pa > pb) return false;
  }
  return pa == pb;
}

inline bool dominance_leq(const Cocharacter& a, const Cocharacter& b) {
  return dominance_leq(to_rational(a), to_rational(b));
}

// ---------------------------------------------------------------------------
// Basic sigma-conjugacy classes
// ---------------------------------------------------------------------------

/// The basic class of Kottwitz invariant kappa in GL_n. Newton vector
/// (kappa/n, ..., kappa/n); with kappa reduced mod n to [0, n) the standard
/// parameters are n = n' n_0 and kappa = n' k_0 with gcd(k_0, n_0) = 1.
struct BasicClass {
  Int kappa = 0;
  int n = 1;

  BasicClass() = default;
  BasicClass(Int kappa_, int n_) : kappa(kappa_), n(n_) {
    if (n < 1) throw guard_error("BasicClass: rank must be positive");
  }

  Int kappa_reduced() const {
    Int r = kappa % n;
    return r < 0 ? r + n : r;
  }
  Int n_prime() const { return std::gcd(kappa_reduced(), static_cast<Int>(n)); }
  Int n0() const { return n / n_prime(); }
  Int k0() const { return kappa_reduced() / n_prime(); }
  Int defect() const { return n - n_prime(); }

  RationalVector newton_vector() const {
    return RationalVector(static_cast<size_t>(n), Rat(kappa, n));
  }

  /// The dual class, with negated Kottwitz invariant.
  BasicClass dual() const { return BasicClass(-kappa, n); }

  friend bool operator==(const BasicClass&, const BasicClass&) = default;
};

}  // namespace awlab
