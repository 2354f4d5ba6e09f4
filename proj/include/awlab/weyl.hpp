#pragma once

// Exact arithmetic in the extended affine Weyl group of GL_n,
//   W~ = X_*(T) x| W_0  with  W_0 = S_n  and  X_*(T) = Z^n.
// Elements are stored in the normal form t^lambda * u (translation left).
// Permutations act on positions 0..n-1 internally; the text format and the
// *_1b helpers use the conventional 1-based labels.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "awlab/errors.hpp"

namespace awlab {

using Int = long long;

// ---------------------------------------------------------------------------
// Permutation (finite Weyl group W_0 = S_n, one-line notation)
// ---------------------------------------------------------------------------

class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(int n) : img_(static_cast<size_t>(n)) {
    std::iota(img_.begin(), img_.end(), 0);
  }

  /// One-line notation with 0-based images.
  static Permutation from_one_line(std::vector<int> images) {
    Permutation u;
    u.img_ = std::move(images);
    u.validate();
    return u;
  }

  /// One-line notation with 1-based images, e.g. {2,3,1} for the 3-cycle.
  static Permutation from_one_line_1b(std::vector<int> images) {
    for (int& x : images) --x;
    return from_one_line(std::move(images));
  }

  /// Cycle (c1 c2 ... ck) on 1-based labels, all other points fixed.
  static Permutation cycle_1b(int n, const std::vector<int>& cyc) {
    Permutation u(n);
    if (cyc.size() < 2) return u;
    for (size_t t = 0; t < cyc.size(); ++t) {
      int a = cyc[t] - 1, b = cyc[(t + 1) % cyc.size()] - 1;
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw guard_error("cycle entry out of range");
      u.img_[static_cast<size_t>(a)] = b;
    }
    u.validate();
    return u;
  }

  /// Adjacent transposition s_i = (i i+1), 1 <= i <= n-1.
  static Permutation simple(int n, int i) {
    if (i < 1 || i >= n) throw guard_error("simple reflection index out of range");
    Permutation u(n);
    std::swap(u.img_[static_cast<size_t>(i - 1)], u.img_[static_cast<size_t>(i)]);
    return u;
  }

  static Permutation transposition_1b(int n, int a, int b) {
    Permutation u(n);
    std::swap(u.img_[static_cast<size_t>(a - 1)], u.img_[static_cast<size_t>(b - 1)]);
    return u;
  }

  /// The n-cycle (1 2 ... n): i |-> i+1 mod n.
  static Permutation long_cycle(int n) {
    Permutation u(n);
    for (int i = 0; i < n; ++i) u.img_[static_cast<size_t>(i)] = (i + 1) % n;
    return u;
  }

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<size_t>(i)]; }

  /// Composition: (u*v)(i) = u(v(i)).
  Permutation operator*(const Permutation& v) const {
    Permutation r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i)
      r.img_[i] = img_[static_cast<size_t>(v.img_[i])];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i)
      r.img_[static_cast<size_t>(img_[i])] = static_cast<int>(i);
    return r;
  }

  bool is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != static_cast<int>(i)) return false;
    return true;
  }

  /// Coxeter length in S_n = number of inversions.
  Int inversions() const {
    Int c = 0;
    for (size_t i = 0; i < img_.size(); ++i)
      for (size_t j = i + 1; j < img_.size(); ++j)
        if (img_[i] > img_[j]) ++c;
    return c;
  }

  std::vector<int> one_line_1b() const {
    std::vector<int> r(img_.begin(), img_.end());
    for (int& x : r) ++x;
    return r;
  }

  /// Cycles of length >= 1 covering {0..n-1}, each starting at its minimum.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (int i = 0; i < n(); ++i) {
      if (seen[static_cast<size_t>(i)]) continue;
      std::vector<int> cyc;
      for (int j = i; !seen[static_cast<size_t>(j)]; j = img_[static_cast<size_t>(j)]) {
        seen[static_cast<size_t>(j)] = true;
        cyc.push_back(j);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  void validate() const {
    std::vector<bool> seen(img_.size(), false);
    for (int x : img_) {
      if (x < 0 || x >= n() || seen[static_cast<size_t>(x)])
        throw guard_error("not a permutation in one-line notation");
      seen[static_cast<size_t>(x)] = true;
    }
  }

  std::vector<int> img_;
};

// ---------------------------------------------------------------------------
// Cocharacter (translation lattice X_*(T) = Z^n)
// ---------------------------------------------------------------------------

class Cocharacter {
 public:
  Cocharacter() = default;
  explicit Cocharacter(int n) : v_(static_cast<size_t>(n), 0) {}
  Cocharacter(std::initializer_list<Int> e) : v_(e) {}
  explicit Cocharacter(std::vector<Int> e) : v_(std::move(e)) {}

  int n() const { return static_cast<int>(v_.size()); }
  Int operator[](int i) const { return v_[static_cast<size_t>(i)]; }
  Int& operator[](int i) { return v_[static_cast<size_t>(i)]; }
  const std::vector<Int>& entries() const { return v_; }

  Int sum() const { return std::accumulate(v_.begin(), v_.end(), Int{0}); }

  bool is_dominant() const {
    for (size_t i = 0; i + 1 < v_.size(); ++i)
      if (v_[i] < v_[i + 1]) return false;
    return true;
  }

  bool is_central() const {
    for (size_t i = 1; i < v_.size(); ++i)
      if (v_[i] != v_[0]) return false;
    return true;
  }

  Cocharacter operator+(const Cocharacter& o) const {
    Cocharacter r = *this;
    for (size_t i = 0; i < v_.size(); ++i) r.v_[i] += o.v_[i];
    return r;
  }

  Cocharacter operator-() const {
    Cocharacter r = *this;
    for (Int& x : r.v_) x = -x;
    return r;
  }

  friend bool operator==(const Cocharacter&, const Cocharacter&) = default;
  friend auto operator<=>(const Cocharacter&, const Cocharacter&) = default;

 private:
  std::vector<Int> v_;
};

/// The permuted vector u.mu with (u.mu)_i = mu_{u^{-1}(i)}.
inline Cocharacter permuted(const Permutation& u, const Cocharacter& mu) {
  Cocharacter r(mu.n());
  for (int i = 0; i < mu.n(); ++i) r[u(i)] = mu[i];
  return r;
}

/// Negate-and-reverse; the cocharacter of the dual lattice.
inline Cocharacter dual_cocharacter(const Cocharacter& mu) {
  std::vector<Int> e(mu.entries().rbegin(), mu.entries().rend());
  for (Int& x : e) x = -x;
  return Cocharacter(std::move(e));
}

// ---------------------------------------------------------------------------
// Affine roots chi_{ij} + k*delta
// ---------------------------------------------------------------------------

/// The affine root chi_{ij} + k*delta, i.e. the function x |-> x_i - x_j + k.
/// Indices are 0-based positions; i != j.
struct AffineRoot {
  int i = 0;
  int j = 1;
  Int k = 0;

  bool is_positive() const { return k > 0 || (k == 0 && i < j); }

  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
};

// ---------------------------------------------------------------------------
// Extended affine Weyl group elements  t^lambda * u
// ---------------------------------------------------------------------------

struct AffWeylElt {
  Cocharacter transl;   // lambda
  Permutation finite;   // u

  int n() const { return finite.n(); }

  static AffWeylElt identity(int n) { return {Cocharacter(n), Permutation(n)}; }
  static AffWeylElt translation(Cocharacter lambda) {
    Permutation id(lambda.n());
    return {std::move(lambda), std::move(id)};
  }
  static AffWeylElt from_finite(Permutation u) {
    Cocharacter zero(u.n());
    return {std::move(zero), std::move(u)};
  }

  /// Simple affine reflection s_k in S~: k = 0 is s_0 = t^{(1,0,...,0,-1)}(1 n),
  /// k >= 1 is the finite s_k.
  static AffWeylElt simple_reflection(int n, int k) {
    if (n < 2 || k < 0 || k >= n) throw guard_error("simple reflection out of range");
    if (k >= 1) return from_finite(Permutation::simple(n, k));
    Cocharacter lam(n);
    lam[0] = 1;
    lam[n - 1] = -1;
    return {std::move(lam), Permutation::transposition_1b(n, 1, n)};
  }

  /// The length-0 generator eta = t^{(1,0,...,0)} (1 2 ... n) of Omega.
  static AffWeylElt omega_generator(int n) {
    Cocharacter lam(n);
    lam[0] = 1;
    return {std::move(lam), Permutation::long_cycle(n)};
  }

  static AffWeylElt omega_power(int n, Int k);

  /// Group law (t^a u)(t^b v) = t^{a + u.b} (uv).
  AffWeylElt operator*(const AffWeylElt& o) const {
    if (n() != o.n()) throw guard_error("rank mismatch in composition");
    return {transl + permuted(finite, o.transl), finite * o.finite};
  }

  AffWeylElt inverse() const {
    Permutation ui = finite.inverse();
    return {-permuted(ui, transl), std::move(ui)};
  }

  bool is_identity() const { return finite.is_identity() && transl == Cocharacter(n()); }

  friend bool operator==(const AffWeylElt&, const AffWeylElt&) = default;
  friend auto operator<=>(const AffWeylElt&, const AffWeylElt&) = default;
};

inline AffWeylElt AffWeylElt::omega_power(int n, Int k) {
  AffWeylElt r = identity(n);
  AffWeylElt g = k >= 0 ? omega_generator(n) : omega_generator(n).inverse();
  for (Int t = 0; t < (k >= 0 ? k : -k); ++t) r = r * g;
  return r;
}

inline AffWeylElt conj_by(const AffWeylElt& w, const AffWeylElt& g) {
  return g * w * g.inverse();
}

/// The finite-left normal form w = u * t^mu, mu = u^{-1}.lambda.
struct FiniteLeftForm {
  Permutation finite;
  Cocharacter transl;
};

inline FiniteLeftForm finite_left_form(const AffWeylElt& w) {
  return {w.finite, permuted(w.finite.inverse(), w.transl)};
}

// ---------------------------------------------------------------------------
// Length and the action on affine roots
// ---------------------------------------------------------------------------

/// Closed-form length: writing t^lambda u = u t^{u^{-1}.lambda},
///   l(w) = sum_{i<j, u(i)>u(j)} |lambda_{u(i)} - lambda_{u(j)} + 1|
///        + sum_{i<j, u(i)<u(j)} |lambda_{u(i)} - lambda_{u(j)}|.
inline Int length(const AffWeylElt& w) {
  Int len = 0;
  const int n = w.n();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int a = w.finite(i), b = w.finite(j);
      const Int d = w.transl[a] - w.transl[b];
      len += (a > b) ? std::llabs(d + 1) : std::llabs(d);
    }
  }
  return len;
}

/// w . (chi_{ij} + k delta) = chi_{u(i) u(j)} + (k - lambda_{u(i)} + lambda_{u(j)}) delta.
inline AffineRoot act_on_affine_root(const AffWeylElt& w, const AffineRoot& a) {
  const int i = w.finite(a.i), j = w.finite(a.j);
  return AffineRoot{i, j, a.k - w.transl[i] + w.transl[j]};
}

/// The simple affine root alpha_k: chi_{k,k+1} for k >= 1 and chi_0 = chi_{n,1} + delta.
inline AffineRoot simple_affine_root(int n, int k) {
  if (k == 0) return AffineRoot{n - 1, 0, 1};
  return AffineRoot{k - 1, k, 0};
}

/// Left descent: l(s_k w) < l(w) iff w^{-1}.alpha_k < 0.
inline bool is_left_descent(const AffWeylElt& w, int k) {
  return !act_on_affine_root(w.inverse(), simple_affine_root(w.n(), k)).is_positive();
}

/// Right descent: l(w s_k) < l(w) iff w.alpha_k < 0.
inline bool is_right_descent(const AffWeylElt& w, int k) {
  return !act_on_affine_root(w, simple_affine_root(w.n(), k)).is_positive();
}

// ---------------------------------------------------------------------------
// Omega-decomposition  w = s_{k_1} ... s_{k_l} eta^m  (W~ = W_a x| Omega)
// ---------------------------------------------------------------------------

struct OmegaDecomposition {
  std::vector<int> word;  // generator indices in S~, a reduced word
  Int omega_power = 0;    // power of eta; equals the Kottwitz invariant
};

/// Greedy descent with smallest-index tie-break; the remainder has length 0.
inline OmegaDecomposition decompose(const AffWeylElt& w) {
  OmegaDecomposition d;
  AffWeylElt x = w;
  Int len = length(x);
  const int n = w.n();
  while (len > 0) {
    int k = -1;
    for (int c = 0; c < n; ++c) {
      if (is_left_descent(x, c)) {
        k = c;
        break;
      }
    }
    if (k < 0) throw internal_error("length > 0 but no left descent");
    x = AffWeylElt::simple_reflection(n, k) * x;
    const Int nl = length(x);
    if (nl != len - 1) throw internal_error("descent did not lower length by 1");
    len = nl;
    d.word.push_back(k);
  }
  d.omega_power = x.transl.sum();
  if (x != AffWeylElt::omega_power(n, d.omega_power))
    throw internal_error("length-0 remainder is not a power of eta");
  return d;
}

inline AffWeylElt reassemble(int n, const OmegaDecomposition& d) {
  AffWeylElt r = AffWeylElt::identity(n);
  for (int k : d.word) r = r * AffWeylElt::simple_reflection(n, k);
  return r * AffWeylElt::omega_power(n, d.omega_power);
}

// ---------------------------------------------------------------------------
// Bruhat order on W~
// ---------------------------------------------------------------------------

/// x <= y iff both lie in the same Omega-coset and the W_a-parts are Bruhat
/// comparable. Uses the lifting property: for a left descent s of y,
/// x <= y iff (sx <= sy if sx < x, else x <= sy).
inline bool bruhat_leq(const AffWeylElt& x, const AffWeylElt& y) {
  if (x.n() != y.n()) throw guard_error("rank mismatch in bruhat_leq");
  const Int kx = x.transl.sum(), ky = y.transl.sum();
  if (kx != ky) return false;
  const int n = x.n();
  const AffWeylElt eta_inv = AffWeylElt::omega_power(n, -kx);
  AffWeylElt xa = x * eta_inv;
  AffWeylElt ya = y * eta_inv;
  Int lx = length(xa), ly = length(ya);
  while (ly > 0) {
    if (lx > ly) return false;
    int k = -1;
    for (int c = 0; c < n; ++c) {
      if (is_left_descent(ya, c)) {
        k = c;
        break;
      }
    }
    if (k < 0) throw internal_error("length > 0 but no left descent");
    const AffWeylElt s = AffWeylElt::simple_reflection(n, k);
    if (is_left_descent(xa, k)) {
      xa = s * xa;
      --lx;
    }
    ya = s * ya;
    --ly;
  }
  return lx == 0 && xa.is_identity();
}

// ---------------------------------------------------------------------------
// Support and Coxeter elements in W_0
// ---------------------------------------------------------------------------

/// Bitmask with bit i set (1 <= i <= n-1) iff s_i occurs in every reduced
/// word of u; equivalently u does not stabilize {1..i}.
inline unsigned support_mask(const Permutation& u) {
  unsigned m = 0;
  int prefmax = -1;
  for (int i = 0; i + 1 < u.n(); ++i) {
    prefmax = std::max(prefmax, u(i));
    if (prefmax > i) m |= 1u << (i + 1);
  }
  return m;
}

inline unsigned full_support_mask(int n) {
  unsigned m = 0;
  for (int i = 1; i < n; ++i) m |= 1u << i;
  return m;
}

inline std::vector<int> support(const Permutation& u) {
  std::vector<int> out;
  const unsigned m = support_mask(u);
  for (int i = 1; i < u.n(); ++i)
    if (m & (1u << i)) out.push_back(i);
  return out;
}

/// Coxeter element test: length n-1 with full support means each simple
/// reflection occurs exactly once in a reduced word. For n = 1 the identity
/// counts as the Coxeter element of the empty generating set.
inline bool is_coxeter(const Permutation& u) {
  if (u.n() == 1) return true;
  return u.inversions() == u.n() - 1 && support_mask(u) == full_support_mask(u.n());
}

// ---------------------------------------------------------------------------
// Minimal coset representatives for W_0 \ W~
// ---------------------------------------------------------------------------

inline bool is_min_coset_rep(const AffWeylElt& w) {
  for (int i = 1; i < w.n(); ++i)
    if (is_left_descent(w, i)) return false;
  return true;
}

/// The unique minimal-length element of the coset W_0 w.
inline AffWeylElt min_coset_rep(const AffWeylElt& w) {
  AffWeylElt x = w;
  for (int i = 1; i < x.n();) {
    if (is_left_descent(x, i)) {
      x = AffWeylElt::simple_reflection(x.n(), i) * x;
      i = 1;
    } else {
      ++i;
    }
  }
  return x;
}

// ---------------------------------------------------------------------------
// Text format  t[l1,...,ln]*p[u(1),...,u(n)]
// ---------------------------------------------------------------------------

inline std::string to_string(const AffWeylElt& w) {
  std::string s = "t[";
  for (int i = 0; i < w.n(); ++i) {
    if (i) s += ',';
    s += std::to_string(w.transl[i]);
  }
  s += "]*p[";
  const auto ol = w.finite.one_line_1b();
  for (int i = 0; i < w.n(); ++i) {
    if (i) s += ',';
    s += std::to_string(ol[static_cast<size_t>(i)]);
  }
  s += ']';
  return s;
}

namespace detail {
inline std::vector<Int> parse_int_list(const std::string& s, size_t& pos, char open, char close) {
  if (pos >= s.size() || s[pos] != open) throw guard_error("parse error: expected '" + std::string(1, open) + "'");
  ++pos;
  std::vector<Int> out;
  while (pos < s.size() && s[pos] != close) {
    size_t used = 0;
    Int val = 0;
    try {
      val = std::stoll(s.substr(pos), &used);
    } catch (const std::exception&) {
      throw guard_error("parse error: expected integer at position " + std::to_string(pos));
    }
    pos += used;
    out.push_back(val);
    if (pos < s.size() && s[pos] == ',') ++pos;
  }
  if (pos >= s.size()) throw guard_error("parse error: unterminated list");
  ++pos;  // close
  return out;
}
}  // namespace detail

inline AffWeylElt parse_elt(const std::string& text) {
  size_t pos = 0;
  if (text.compare(0, 1, "t") != 0) throw guard_error("parse error: expected 't['");
  ++pos;
  std::vector<Int> lam = detail::parse_int_list(text, pos, '[', ']');
  if (text.compare(pos, 3, "*p[") != 0) throw guard_error("parse error: expected '*p['");
  pos += 2;
  std::vector<Int> perm = detail::parse_int_list(text, pos, '[', ']');
  if (pos != text.size()) throw guard_error("parse error: trailing characters");
  if (lam.size() != perm.size()) throw guard_error("parse error: mismatched lengths");
  std::vector<int> img(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] < 1 || perm[i] > static_cast<Int>(perm.size()))
      throw guard_error("parse error: permutation entry out of range");
    img[i] = static_cast<int>(perm[i]);
  }
  return {Cocharacter(std::move(lam)), Permutation::from_one_line_1b(std::move(img))};
}

}  // namespace awlab
