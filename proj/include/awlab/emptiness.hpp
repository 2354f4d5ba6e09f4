#pragma once

// Non-emptiness of the affine Deligne-Lusztig variety X_x(b) in the affine
// flag variety, for b basic, decided through the P-alcove criterion: X_x(b)
// is non-empty iff every pair (w0, S') for which x.a is a ^{w0}P_{S'}-alcove
// satisfies the Levi slope condition. Also the p2-conjugation emptiness
// shortcut and membership of the basic class in B(G, lambda).

#include <cstdlib>
#include <optional>
#include <vector>

#include "awlab/alcove.hpp"
#include "awlab/weyl.hpp"

namespace awlab {

/// Rank guard shared by the factorial-scale enumerations; the environment
/// variable AWLAB_MAX_N overrides it (unsupported territory).
inline int rank_guard(int default_max) {
  if (const char* env = std::getenv("AWLAB_MAX_N")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return default_max;
}

inline std::vector<Permutation> all_permutations(int n) {
  if (n > rank_guard(8)) throw guard_error("rank guard exceeded in W_0 enumeration");
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Standard Levi shapes
// ---------------------------------------------------------------------------

/// A subset S' of the simple reflections {s_1, ..., s_{n-1}}, together with
/// the block composition of n cut out by the missing generators.
struct LeviShape {
  int n = 1;
  unsigned mask = 0;           // bit i set iff s_i in S'
  std::vector<int> block_of;   // position (0-based) -> block index

  static LeviShape from_mask(int n, unsigned mask) {
    LeviShape s;
    s.n = n;
    s.mask = mask;
    s.block_of.resize(static_cast<size_t>(n));
    int blk = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && !(mask & (1u << i))) ++blk;  // s_i missing: cut between i-1 and i
      s.block_of[static_cast<size_t>(i)] = blk;
    }
    return s;
  }

  static LeviShape full(int n) { return from_mask(n, full_support_mask(n)); }

  bool is_full() const { return mask == full_support_mask(n); }
  int num_blocks() const { return block_of.empty() ? 0 : block_of.back() + 1; }

  std::vector<int> block_sizes() const {
    std::vector<int> sz(static_cast<size_t>(num_blocks()), 0);
    for (int b : block_of) ++sz[static_cast<size_t>(b)];
    return sz;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 1; i < n; ++i)
      if (mask & (1u << i)) out.push_back(i);
    return out;
  }

  friend bool operator==(const LeviShape& a, const LeviShape& b) {
    return a.n == b.n && a.mask == b.mask;
  }
};

struct PAlcovePair {
  Permutation w0;
  LeviShape levi;
};

namespace detail {

/// Iwahori valuation pattern for lower-triangular I: the (a,b) root subgroup
/// meets I in p^{v_I(a,b)} with v_I = 1 above the diagonal, 0 below.
inline Int v_iwahori(int a, int b) { return a < b ? 1 : 0; }

/// ok(i,j) = [ U_{ij} cap ^xI subset U_{ij} cap I ] for x = t^lambda u:
///   lambda_i - lambda_j + v_I(u^{-1}(i), u^{-1}(j)) >= v_I(i, j).
struct AlcoveScan {
  int n;
  std::vector<char> ok;  // n*n, ordered pairs

  explicit AlcoveScan(const AffWeylElt& x) : n(x.n()), ok(static_cast<size_t>(n * n), 1) {
    const Permutation uinv = x.finite.inverse();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const Int v = x.transl[i] - x.transl[j] + v_iwahori(uinv(i), uinv(j));
        ok[static_cast<size_t>(i * n + j)] = v >= v_iwahori(i, j) ? 1 : 0;
      }
  }

  /// Condition (ii) over chi_{ab} in w0(Phi_+ \ Phi_{S'}).
  bool condition_ii(const Permutation& w0, const LeviShape& s) const {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (s.block_of[static_cast<size_t>(a)] == s.block_of[static_cast<size_t>(b)]) continue;
        if (!ok[static_cast<size_t>(w0(a) * n + w0(b))]) return false;
      }
    return true;
  }
};

}  // namespace detail

/// x.a is a ^{w0}P_{S'}-alcove: (i) the finite part of w0^{-1} x w0 lies in
/// W_{S'}, and (ii) U_{ij} cap ^xI is contained in U_{ij} cap I for every
/// root chi_{ij} in w0(Phi_+ \ Phi_{S'}).
inline bool is_p_alcove(const AffWeylElt& x, const Permutation& w0, const LeviShape& s) {
  const Permutation v = w0.inverse() * x.finite * w0;
  if ((support_mask(v) & ~s.mask) != 0) return false;
  return detail::AlcoveScan(x).condition_ii(w0, s);
}

/// All pairs (w0, S') for which x.a is a ^{w0}P_{S'}-alcove.
/// Always contains (identity, S).
inline std::vector<PAlcovePair> p_alcove_pairs(const AffWeylElt& x) {
  const int n = x.n();
  if (n > rank_guard(8)) throw guard_error("rank guard exceeded in p_alcove_pairs");
  const detail::AlcoveScan scan(x);
  std::vector<PAlcovePair> out;
  for (const Permutation& w0 : all_permutations(n)) {
    const unsigned supp = support_mask(w0.inverse() * x.finite * w0);
    const unsigned fullm = full_support_mask(n);
    for (unsigned mask = 0; mask <= fullm; mask += 2) {  // bit 0 unused
      if ((supp & ~mask) != 0) continue;
      const LeviShape s = LeviShape::from_mask(n, mask);
      if (scan.condition_ii(w0, s)) out.push_back({w0, s});
    }
  }
  return out;
}

namespace detail {

/// Levi slope condition for basic b: with y = w0^{-1} x w0 and k_i the block
/// sums of the translation part of y, b is sigma-conjugate into M_{S'} with
/// kappa_{M_{S'}} matching x iff k_i * n = kappa(b) * n_i for every block.
inline bool slope_condition(const AffWeylElt& x, const Permutation& w0, const LeviShape& s,
                            const BasicClass& b) {
  const int n = x.n();
  std::vector<Int> block_sum(static_cast<size_t>(s.num_blocks()), 0);
  for (int a = 0; a < n; ++a)
    block_sum[static_cast<size_t>(s.block_of[static_cast<size_t>(a)])] += x.transl[w0(a)];
  const std::vector<int> sizes = s.block_sizes();
  for (size_t i = 0; i < block_sum.size(); ++i)
    if (block_sum[i] * n != b.kappa * sizes[i]) return false;
  return true;
}

}  // namespace detail

struct NonemptyVerdict {
  bool nonempty = true;
  std::vector<PAlcovePair> witnesses;  // P-alcove pairs failing the slope condition
};

/// Theorem-level non-emptiness of X_x(b), b basic, with the failing pairs.
inline NonemptyVerdict nonempty_basic_verdict(const AffWeylElt& x, const BasicClass& b) {
  const int n = x.n();
  if (n != b.n) throw guard_error("rank mismatch in nonempty_basic");
  if (n > rank_guard(8)) throw guard_error("rank guard exceeded in nonempty_basic");
  const detail::AlcoveScan scan(x);
  NonemptyVerdict verdict;
  const unsigned fullm = full_support_mask(n);
  for (const Permutation& w0 : all_permutations(n)) {
    const unsigned supp = support_mask(w0.inverse() * x.finite * w0);
    for (unsigned mask = 0; mask <= fullm; mask += 2) {
      if ((supp & ~mask) != 0) continue;
      const LeviShape s = LeviShape::from_mask(n, mask);
      if (!scan.condition_ii(w0, s)) continue;
      if (!detail::slope_condition(x, w0, s, b)) {
        verdict.nonempty = false;
        verdict.witnesses.push_back({w0, s});
      }
    }
  }
  return verdict;
}

inline bool nonempty_basic(const AffWeylElt& x, const BasicClass& b) {
  const int n = x.n();
  if (n != b.n) throw guard_error("rank mismatch in nonempty_basic");
  if (n > rank_guard(8)) throw guard_error("rank guard exceeded in nonempty_basic");
  const detail::AlcoveScan scan(x);
  const unsigned fullm = full_support_mask(n);
  for (const Permutation& w0 : all_permutations(n)) {
    const unsigned supp = support_mask(w0.inverse() * x.finite * w0);
    for (unsigned mask = 0; mask <= fullm; mask += 2) {
      if ((supp & ~mask) != 0) continue;
      const LeviShape s = LeviShape::from_mask(n, mask);
      if (!scan.condition_ii(w0, s)) continue;
      if (!detail::slope_condition(x, w0, s, b)) return false;
    }
  }
  return true;
}

/// Emptiness shortcut: if the translation part of w (in t-left form) differs
/// from the Newton vector of b and p2(w)^{-1} p1(w) p2(w) lies in a proper
/// standard parabolic subgroup of W_0, then X_w(b) is empty.
inline bool empty_shortcut(const AffWeylElt& w, const BasicClass& b) {
  if (w.n() != b.n) throw guard_error("rank mismatch in empty_shortcut");
  const RationalVector nu = b.newton_vector();
  bool lambda_is_nu = true;
  for (int i = 0; i < w.n(); ++i)
    if (Rat(w.transl[i]) != nu[static_cast<size_t>(i)]) {
      lambda_is_nu = false;
      break;
    }
  if (lambda_is_nu) return false;
  const Permutation q = p2(w);
  const Permutation c = q.inverse() * p1(w) * q;
  return support_mask(c) != full_support_mask(w.n());
}

/// b lies in B(G, lambda) iff kappa(b) equals the coordinate sum; for
/// dominant lambda this is equivalent to (kappa/n, ..., kappa/n) <= lambda.
inline bool basic_in_bg_lambda(const BasicClass& b, const Cocharacter& lam) {
  if (lam.n() != b.n) throw guard_error("rank mismatch in basic_in_bg_lambda");
  if (!lam.is_dominant()) throw guard_error("basic_in_bg_lambda requires dominant lambda");
  return b.kappa == lam.sum();
}

}  // namespace awlab
