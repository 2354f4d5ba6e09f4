#pragma once

// Admissible sets, minimal coset representatives, the finite-Coxeter-type
// classifier (by definition and in closed form), the lambda_{i,r} element
// families and the dimension formula
//   dim X_lambda(b) = <rho, lambda - nu_b> - def(b)/2.

#include <optional>
#include <set>
#include <vector>

#include "awlab/alcove.hpp"
#include "awlab/emptiness.hpp"
#include "awlab/weyl.hpp"

namespace awlab {

/// The W_0-orbit of lambda: all distinct coordinate permutations.
inline std::vector<Cocharacter> translation_orbit(const Cocharacter& lam) {
  std::vector<Int> v = lam.entries();
  std::sort(v.begin(), v.end());
  std::vector<Cocharacter> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// The lambda-admissible set {w <= t^{lambda'} : lambda' in W_0 lambda},
/// computed by closing each translation's reduced word under subwords.
inline std::vector<AffWeylElt> adm_set(const Cocharacter& lam) {
  const int n = lam.n();
  const AffWeylElt t = AffWeylElt::translation(lam);
  if (length(t) > 12) throw guard_error("adm_set: length guard exceeded (l(t^lambda) <= 12)");
  std::set<AffWeylElt> acc;
  for (const Cocharacter& mu : translation_orbit(lam)) {
    const OmegaDecomposition d = decompose(AffWeylElt::translation(mu));
    std::set<AffWeylElt> lower{AffWeylElt::identity(n)};
    for (int k : d.word) {
      const AffWeylElt s = AffWeylElt::simple_reflection(n, k);
      std::set<AffWeylElt> next = lower;
      for (const AffWeylElt& x : lower) next.insert(x * s);
      lower = std::move(next);
    }
    const AffWeylElt shift = AffWeylElt::omega_power(n, d.omega_power);
    for (const AffWeylElt& x : lower) acc.insert(x * shift);
  }
  return {acc.begin(), acc.end()};
}

/// SAdm(lambda)^o = {minimal coset representatives meeting W_0 t^lambda W_0};
/// one descent chain per right factor w2 in W_0.
inline std::vector<AffWeylElt> s_adm_circ(const Cocharacter& lam) {
  const int n = lam.n();
  if (!lam.is_dominant()) throw guard_error("s_adm_circ requires dominant lambda");
  if (n > rank_guard(6)) throw guard_error("rank guard exceeded in s_adm_circ");
  const AffWeylElt t = AffWeylElt::translation(lam);
  std::set<AffWeylElt> acc;
  for (const Permutation& w2 : all_permutations(n))
    acc.insert(min_coset_rep(t * AffWeylElt::from_finite(w2)));
  return {acc.begin(), acc.end()};
}

/// The subset of SAdm(lambda)^o whose finite part is a Coxeter element.
inline std::vector<AffWeylElt> s_adm_circ_cox(const Cocharacter& lam) {
  std::vector<AffWeylElt> out;
  for (const AffWeylElt& w : s_adm_circ(lam))
    if (is_coxeter(p1(w))) out.push_back(w);
  return out;
}

// ---------------------------------------------------------------------------
// Finite-Coxeter-type classification
// ---------------------------------------------------------------------------

enum class ClassifyMode { strict };

enum class MatchedForm { F1, F2, F3, F4 };

inline const char* to_string(MatchedForm f) {
  switch (f) {
    case MatchedForm::F1: return "F1";
    case MatchedForm::F2: return "F2";
    case MatchedForm::F3: return "F3";
    case MatchedForm::F4: return "F4";
  }
  return "?";
}

struct ClassificationVerdict {
  bool is_finite_coxeter = false;
  std::optional<MatchedForm> matched_form;        // closed-form path only
  std::vector<std::pair<AffWeylElt, bool>> witnesses;  // (stratum, nonempty)
};

/// By-definition classifier: lambda is of finite Coxeter type iff X_w(b) is
/// empty for every non-Coxeter w in SAdm(lambda)^o, where b is the unique
/// basic class in B(G, lambda).
inline ClassificationVerdict classify_by_criteria(const Cocharacter& lam,
                                                  ClassifyMode = ClassifyMode::strict) {
  if (!lam.is_dominant()) throw guard_error("classify_by_criteria requires dominant lambda");
  const BasicClass b(lam.sum(), lam.n());
  ClassificationVerdict v;
  v.is_finite_coxeter = true;
  for (const AffWeylElt& w : s_adm_circ(lam)) {
    if (is_coxeter(p1(w))) continue;
    const bool ne = nonempty_basic(w, b);
    v.witnesses.emplace_back(w, ne);
    if (ne) v.is_finite_coxeter = false;
  }
  return v;
}

namespace detail {

/// Solve d = n*r + kappa with 0 <= kappa < n and the standing bounds
/// (r >= 1 if kappa = 0, r >= 0 if kappa >= 1); d >= 1 always works.
inline bool family_params_from_gap(Int d, int n, Int& r, Int& kappa) {
  if (d < 1) return false;
  r = d / n;
  kappa = d % n;
  if (kappa == 0 && r < 1) return false;
  return true;
}

}  // namespace detail

/// Closed-form classifier: lambda_ad matches one of
///   F1 = ((n-1)r+kappa, -r, ..., -r)          F2 = (r, ..., r, -(n-1)r-kappa)
///   F3 = ((n-1)r+1+kappa, -r, ..., -r, -r-1)  F4 = (r+1, r, ..., r, -(n-1)r-1-kappa)
/// with 0 <= kappa < n, r >= 1 if kappa = 0 and r >= 0 otherwise. Matching is
/// on consecutive differences, which determine lambda modulo the central line.
inline ClassificationVerdict classify_closed_form(const Cocharacter& lam) {
  if (!lam.is_dominant()) throw guard_error("classify_closed_form requires dominant lambda");
  const int n = lam.n();
  ClassificationVerdict v;
  if (n == 1) {  // rank 1: every lambda_ad is trivial and of finite Coxeter type
    v.is_finite_coxeter = true;
    v.matched_form = MatchedForm::F1;
    return v;
  }
  std::vector<Int> d(static_cast<size_t>(n - 1));
  for (int i = 0; i + 1 < n; ++i) d[static_cast<size_t>(i)] = lam[i] - lam[i + 1];
  const auto mid_flat = [&](int from, int to) {  // d[from..to) all zero
    for (int i = from; i < to; ++i)
      if (d[static_cast<size_t>(i)] != 0) return false;
    return true;
  };
  Int r = 0, kappa = 0;
  const Int first = d.front(), last = d.back();
  // F1: single gap after the first entry.
  if (mid_flat(1, n - 1) && detail::family_params_from_gap(first, n, r, kappa)) {
    v.is_finite_coxeter = true;
    v.matched_form = MatchedForm::F1;
    return v;
  }
  // F2: single gap before the last entry.
  if (mid_flat(0, n - 2) && detail::family_params_from_gap(last, n, r, kappa)) {
    v.is_finite_coxeter = true;
    v.matched_form = MatchedForm::F2;
    return v;
  }
  if (n >= 3) {
    // F3: last gap exactly 1, flat middle, first gap = nr + kappa + 1.
    if (last == 1 && mid_flat(1, n - 2) &&
        detail::family_params_from_gap(first - 1, n, r, kappa)) {
      v.is_finite_coxeter = true;
      v.matched_form = MatchedForm::F3;
      return v;
    }
    // F4: first gap exactly 1, flat middle, last gap = nr + kappa + 1.
    if (first == 1 && mid_flat(1, n - 2) &&
        detail::family_params_from_gap(last - 1, n, r, kappa)) {
      v.is_finite_coxeter = true;
      v.matched_form = MatchedForm::F4;
      return v;
    }
  } else {
    // n = 2: F3/F4 collapse to a single gap 2r + kappa + 2, already covered
    // by F1/F2 via the substitution r -> r+1.
  }
  v.is_finite_coxeter = false;
  return v;
}

// ---------------------------------------------------------------------------
// The lambda_{i,r} families
// ---------------------------------------------------------------------------

struct FamilyParams {
  int n = 2;
  int i = 0;       // 0 or 1
  Int r = 0;
  Int kappa = 0;   // 0 <= kappa < n; r > 0 required when kappa = 0
};

struct Family {
  Cocharacter lambda;        // lambda_{i,r}
  Cocharacter lambda_prime;  // the representative lambda'_{i,r} used by w_{i,r}
  Cocharacter lambda_dual;   // lambda*_{i,r}
  std::vector<Cocharacter> nu;  // X_*(T)_{lambda_{i,r}}, fixing the first entry
  AffWeylElt w;              // w_{i,r} = t^{lambda'_{i,r}} (1 2 ... n)
};

inline Family make_family(const FamilyParams& p) {
  if (p.n < 2) throw guard_error("make_family: rank must be >= 2");
  if (p.i != 0 && p.i != 1) throw guard_error("make_family: i must be 0 or 1");
  if (p.kappa < 0 || p.kappa >= p.n) throw guard_error("make_family: kappa out of [0, n)");
  if (p.r < 0 || (p.kappa == 0 && p.r == 0))
    throw guard_error("make_family: need r > 0 when kappa = 0, r >= 0 otherwise");
  const int n = p.n;
  Family f;
  Cocharacter lam(n);
  lam[0] = static_cast<Int>(n - 1) * p.r + p.kappa + (p.i == 1 ? 1 : 0);
  for (int i = 1; i < n; ++i) lam[i] = -p.r;
  if (p.i == 1) lam[n - 1] = -p.r - 1;
  f.lambda = lam;
  f.lambda_dual = dual_cocharacter(lam);
  if (p.i == 0) {
    f.lambda_prime = lam;
    f.nu = {lam};
  } else {
    // nu_j has its (j+1)-th entry (1-based) equal to -r-1; nu_1 = lambda'.
    for (int j = 1; j <= n - 1; ++j) {
      Cocharacter nu(n);
      nu[0] = lam[0];
      for (int i = 1; i < n; ++i) nu[i] = -p.r;
      nu[j] = -p.r - 1;
      f.nu.push_back(std::move(nu));
    }
    f.lambda_prime = f.nu.front();
  }
  f.w = AffWeylElt{f.lambda_prime, Permutation::long_cycle(n)};
  return f;
}

// ---------------------------------------------------------------------------
// Dimension formula
// ---------------------------------------------------------------------------

struct DimensionInfo {
  Int total = 0;     // dim X_lambda(b)
  Int drinfeld = 0;  // n' - 1
  Int affine = 0;    // total - (n' - 1)
};

/// dim X_lambda(b) = <rho, lambda - nu_b> - def(b)/2 with
/// rho = ((n-1)/2, (n-3)/2, ..., -(n-1)/2); <rho, nu_b> = 0 for basic b.
inline DimensionInfo dimension_formula(const Cocharacter& lam, const BasicClass& b) {
  if (!basic_in_bg_lambda(b, lam))
    throw guard_error("dimension_formula: b is not the basic class of B(G, lambda)");
  const int n = lam.n();
  Int two_rho_lam = 0;
  for (int i = 0; i < n; ++i) two_rho_lam += static_cast<Int>(n - 1 - 2 * i) * lam[i];
  const Int numer = two_rho_lam - b.defect();
  if (numer % 2 != 0) throw internal_error("dimension_formula: non-integral value");
  DimensionInfo info;
  info.total = numer / 2;
  if (info.total < 0) throw internal_error("dimension_formula: negative dimension");
  info.drinfeld = b.n_prime() - 1;
  info.affine = info.total - info.drinfeld;
  return info;
}

}  // namespace awlab
