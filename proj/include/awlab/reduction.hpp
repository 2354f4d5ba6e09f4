#pragma once

// The Deligne-Lusztig reduction method as a rewriting system on W~:
// sigma-conjugation by simple reflections (sigma acts trivially for split
// GL_n), the non-increasing relation ->, the equivalence ~~ searched by BFS,
// and reduction graphs with dimension bookkeeping
//   l(sws) = l(w):     X_w(b) ~ X_{sws}(b)
//   l(sws) = l(w) - 2: X_w(b) = X_1 u X_2 with A^1- and G_m-bundles over
//                      X_{sws}(b) and X_{sw}(b).

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "awlab/emptiness.hpp"
#include "awlab/weyl.hpp"

namespace awlab {

enum class MoveKind { OmegaConj, SimpleConjEqual, SplitClosed, SplitOpen };

inline const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::OmegaConj: return "OmegaConj";
    case MoveKind::SimpleConjEqual: return "SimpleConjEqual";
    case MoveKind::SplitClosed: return "SplitClosed";
    case MoveKind::SplitOpen: return "SplitOpen";
  }
  return "?";
}

/// One rewriting move; param is the generator index for conjugation moves
/// (including the split pair) and the power of eta for OmegaConj.
struct ReductionMove {
  MoveKind kind = MoveKind::SimpleConjEqual;
  Int param = 0;
};

enum class MoveClass { Equal, Split, Raise };

/// Classify conjugation by s in S~: Equal iff l(sws) = l(w), Split iff it
/// drops by 2, Raise otherwise.
inline MoveClass classify_move(const AffWeylElt& w, int gen) {
  const AffWeylElt s = AffWeylElt::simple_reflection(w.n(), gen);
  const Int lw = length(w), lc = length(s * w * s);
  if (lc == lw) return MoveClass::Equal;
  if (lc == lw - 2) return MoveClass::Split;
  if (lc == lw + 2) return MoveClass::Raise;
  throw internal_error("l(sws) - l(w) not in {-2, 0, +2}");
}

// ---------------------------------------------------------------------------
// The equivalence  w ~~ w'  (mutual non-increasing conjugation)
// ---------------------------------------------------------------------------

enum class ApproxStatus { Found, NoPath, DepthExceeded };

struct ApproxResult {
  ApproxStatus status = ApproxStatus::NoPath;
  std::vector<ReductionMove> path;  // conjugators from w to w'
};

/// Default search depth; 2*l(w) alone is too small when l(w) is tiny (the
/// rungs over a length-0 base sit at S-conjugation distance up to n-2), so
/// the rank is added as a floor.
inline Int default_approx_depth(const AffWeylElt& w) { return 2 * length(w) + w.n(); }

/// BFS for a chain of length-preserving conjugations by elements of S
/// turning w into w2 (such a chain exists iff w ~~ w2 when lengths agree,
/// since non-increasing moves between equal-length endpoints never dip).
/// OmegaConj moves by eta^{+-1} are only used when allow_omega is set.
/// NoPath is definitive (the component is exhausted); DepthExceeded is not.
inline ApproxResult approx_equiv(const AffWeylElt& w, const AffWeylElt& w2,
                                 std::optional<Int> max_depth = std::nullopt,
                                 bool allow_omega = false) {
  if (w.n() != w2.n()) throw guard_error("rank mismatch in approx_equiv");
  if (length(w) != length(w2)) return {ApproxStatus::NoPath, {}};
  const Int depth_limit = max_depth.value_or(default_approx_depth(w));
  const int n = w.n();

  std::map<AffWeylElt, std::pair<AffWeylElt, ReductionMove>> parent;  // node -> (pred, move)
  std::map<AffWeylElt, Int> dist{{w, 0}};
  std::deque<AffWeylElt> queue{w};
  bool exceeded = false;

  const auto emit_path = [&](AffWeylElt x) {
    std::vector<ReductionMove> path;
    while (!(x == w)) {
      auto it = parent.find(x);
      path.push_back(it->second.second);
      x = it->second.first;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  while (!queue.empty()) {
    const AffWeylElt cur = queue.front();
    queue.pop_front();
    if (cur == w2) return {ApproxStatus::Found, emit_path(cur)};
    const Int d = dist[cur];
    if (d == depth_limit) {
      exceeded = true;
      continue;
    }
    std::vector<std::pair<AffWeylElt, ReductionMove>> nexts;
    for (int gen = 1; gen < n; ++gen) {
      const AffWeylElt s = AffWeylElt::simple_reflection(n, gen);
      const AffWeylElt c = s * cur * s;
      if (length(c) == length(cur))
        nexts.emplace_back(c, ReductionMove{MoveKind::SimpleConjEqual, gen});
    }
    if (allow_omega) {
      for (Int pw : {Int{1}, Int{-1}}) {
        const AffWeylElt g = AffWeylElt::omega_power(n, pw);
        nexts.emplace_back(conj_by(cur, g), ReductionMove{MoveKind::OmegaConj, pw});
      }
    }
    for (auto& [nxt, mv] : nexts) {
      if (dist.contains(nxt)) continue;
      dist[nxt] = d + 1;
      parent.emplace(nxt, std::make_pair(cur, mv));
      queue.push_back(nxt);
    }
  }
  return {exceeded ? ApproxStatus::DepthExceeded : ApproxStatus::NoPath, {}};
}

/// Apply a conjugation path, for checking emitted witnesses.
inline AffWeylElt apply_moves(const AffWeylElt& w, const std::vector<ReductionMove>& path) {
  AffWeylElt x = w;
  for (const ReductionMove& mv : path) {
    switch (mv.kind) {
      case MoveKind::SimpleConjEqual: {
        const AffWeylElt s = AffWeylElt::simple_reflection(x.n(), static_cast<int>(mv.param));
        x = s * x * s;
        break;
      }
      case MoveKind::OmegaConj:
        x = conj_by(x, AffWeylElt::omega_power(x.n(), mv.param));
        break;
      default:
        throw guard_error("apply_moves: not a conjugation move");
    }
  }
  return x;
}

/// The largest subset S' of the finite simple reflections with
/// Ad(w)(S') = S', as a support mask. Conjugation by w must permute S';
/// the fixpoint keeps exactly the indices whose forward orbit stays inside
/// the domain of i |-> j where w s_i w^{-1} = s_j.
inline unsigned ad_stable_support(const AffWeylElt& w) {
  const int n = w.n();
  std::vector<int> image(static_cast<size_t>(n), -1);  // -1: w s_i w^{-1} not in S
  for (int i = 1; i < n; ++i) {
    const AffWeylElt c = conj_by(AffWeylElt::simple_reflection(n, i), w);
    for (int j = 1; j < n; ++j)
      if (c == AffWeylElt::simple_reflection(n, j)) {
        image[static_cast<size_t>(i)] = j;
        break;
      }
  }
  std::vector<bool> keep(static_cast<size_t>(n), false);
  for (int i = 1; i < n; ++i) keep[static_cast<size_t>(i)] = image[static_cast<size_t>(i)] > 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 1; i < n; ++i)
      if (keep[static_cast<size_t>(i)] && !keep[static_cast<size_t>(image[static_cast<size_t>(i)])]) {
        keep[static_cast<size_t>(i)] = false;
        changed = true;
      }
  }
  unsigned mask = 0;
  for (int i = 1; i < n; ++i)
    if (keep[static_cast<size_t>(i)]) mask |= 1u << i;
  return mask;
}

// ---------------------------------------------------------------------------
// Reduction graphs
// ---------------------------------------------------------------------------

struct ReductionGraph {
  struct Node {
    AffWeylElt elt;
    Int length = 0;
    bool nonempty = false;
    std::optional<Int> dim;  // unset: empty node or unresolved
  };
  struct Edge {
    int src = 0;
    int dst = 0;
    ReductionMove move;
  };

  std::vector<Node> nodes;
  std::vector<Edge> edges;
  int root = 0;
};

namespace detail {

struct GraphBuilder {
  const BasicClass& b;
  ReductionGraph g;
  std::map<AffWeylElt, int> index;

  int node(const AffWeylElt& w) {
    auto it = index.find(w);
    if (it != index.end()) return it->second;
    const int id = static_cast<int>(g.nodes.size());
    g.nodes.push_back({w, length(w), nonempty_basic(w, b), std::nullopt});
    index.emplace(w, id);
    return id;
  }

  /// Within the length-preserving conjugation component of w, find a node
  /// admitting a Split move; returns the chain of Equal/Omega moves.
  std::optional<std::pair<AffWeylElt, std::vector<ReductionMove>>> find_splittable(
      const AffWeylElt& w) {
    const int n = w.n();
    std::map<AffWeylElt, std::pair<AffWeylElt, ReductionMove>> parent;
    std::map<AffWeylElt, bool> seen{{w, true}};
    std::deque<AffWeylElt> queue{w};
    const auto emit = [&](AffWeylElt x) {
      std::vector<ReductionMove> path;
      while (!(x == w)) {
        auto it = parent.find(x);
        path.push_back(it->second.second);
        x = it->second.first;
      }
      std::reverse(path.begin(), path.end());
      return path;
    };
    size_t expanded = 0;
    while (!queue.empty()) {
      const AffWeylElt cur = queue.front();
      queue.pop_front();
      for (int gen = 0; gen < n; ++gen)
        if (classify_move(cur, gen) == MoveClass::Split)
          return std::make_pair(cur, emit(cur));
      if (++expanded > 20000) throw guard_error("reduction_graph: conjugation component too large");
      std::vector<std::pair<AffWeylElt, ReductionMove>> nexts;
      for (int gen = 0; gen < n; ++gen) {
        const AffWeylElt s = AffWeylElt::simple_reflection(n, gen);
        const AffWeylElt c = s * cur * s;
        if (length(c) == length(cur))
          nexts.emplace_back(c, ReductionMove{MoveKind::SimpleConjEqual, gen});
      }
      for (Int pw : {Int{1}, Int{-1}})
        nexts.emplace_back(conj_by(cur, AffWeylElt::omega_power(n, pw)),
                           ReductionMove{MoveKind::OmegaConj, pw});
      for (auto& [nxt, mv] : nexts) {
        if (seen.contains(nxt)) continue;
        seen[nxt] = true;
        parent.emplace(nxt, std::make_pair(cur, mv));
        queue.push_back(nxt);
      }
    }
    return std::nullopt;
  }

  /// Returns the node id; fills dim bottom-up where it resolves.
  int build(const AffWeylElt& w, Int depth) {
    const int id = node(w);
    ReductionGraph::Node& nd = g.nodes[static_cast<size_t>(id)];
    if (!nd.nonempty) return id;               // empty: terminal
    if (nd.length == 0) {                      // basic terminal stratum
      g.nodes[static_cast<size_t>(id)].dim = 0;
      return id;
    }
    if (nd.dim.has_value()) return id;         // memoized
    if (depth <= 0) throw guard_error("reduction_graph: depth guard exceeded");

    auto found = find_splittable(w);
    if (!found) return id;                     // minimal length in class: unresolved

    // Chain of length-preserving conjugations to the splittable element.
    int cur_id = id;
    AffWeylElt cur = w;
    for (const ReductionMove& mv : found->second) {
      const AffWeylElt nxt = apply_moves(cur, {mv});
      const int nid = node(nxt);
      if (g.nodes[static_cast<size_t>(nid)].nonempty != g.nodes[static_cast<size_t>(cur_id)].nonempty)
        throw internal_error("reduction_graph: verdict changed along an isomorphism edge");
      g.edges.push_back({cur_id, nid, mv});
      cur_id = nid;
      cur = nxt;
    }

    int gen = -1;
    for (int c = 0; c < w.n(); ++c)
      if (classify_move(cur, c) == MoveClass::Split) {
        gen = c;
        break;
      }
    if (gen < 0) throw internal_error("reduction_graph: splittable node lost its split");
    const AffWeylElt s = AffWeylElt::simple_reflection(w.n(), gen);
    const AffWeylElt closed = s * cur * s;  // length - 2
    const AffWeylElt open = s * cur;        // length - 1
    const int cid = build(closed, depth - 1);
    const int oid = build(open, depth - 1);
    g.edges.push_back({cur_id, cid, ReductionMove{MoveKind::SplitClosed, gen}});
    g.edges.push_back({cur_id, oid, ReductionMove{MoveKind::SplitOpen, gen}});

    const ReductionGraph::Node& cn = g.nodes[static_cast<size_t>(cid)];
    const ReductionGraph::Node& on = g.nodes[static_cast<size_t>(oid)];
    if (!cn.nonempty && !on.nonempty)
      throw internal_error("reduction_graph: nonempty node with both strata empty");
    std::optional<Int> dim;
    bool unresolved = false;
    for (const auto* child : {&cn, &on}) {
      if (!child->nonempty) continue;
      if (!child->dim.has_value()) {
        unresolved = true;
        continue;
      }
      const Int d = *child->dim + 1;
      if (!dim || d > *dim) dim = d;
    }
    if (!unresolved && dim) {
      // The dimension holds along the whole conjugation chain back to w.
      AffWeylElt back = cur;
      g.nodes[static_cast<size_t>(index.at(back))].dim = dim;
      for (auto it = found->second.rbegin(); it != found->second.rend(); ++it) {
        ReductionMove inv = *it;
        if (inv.kind == MoveKind::OmegaConj) inv.param = -inv.param;
        back = apply_moves(back, {inv});
        g.nodes[static_cast<size_t>(index.at(back))].dim = dim;
      }
    }
    return id;
  }
};

}  // namespace detail

/// Reduction graph rooted at w: split edges recurse with memoization, equal
/// edges walk to a splittable conjugate; terminals are empty nodes and
/// length-0 strata (dimension 0). Nodes where the class bottoms out at
/// positive length stay unresolved.
inline ReductionGraph reduction_graph(const AffWeylElt& w, const BasicClass& b, Int max_depth) {
  detail::GraphBuilder builder{b, {}, {}};
  if (kottwitz(w) != b.kappa) {
    // Kottwitz mismatch: the variety is trivially empty.
    builder.node(w);
    return std::move(builder.g);
  }
  builder.build(w, max_depth);
  return std::move(builder.g);
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

inline std::string export_dot(const ReductionGraph& g) {
  std::string out = "digraph reduction {\n";
  out += "  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& nd = g.nodes[i];
    out += "  n" + std::to_string(i) + " [label=\"" + to_string(nd.elt) +
           "\\nlen=" + std::to_string(nd.length) +
           (nd.nonempty ? "  nonempty" : "  empty") +
           (nd.dim ? "  dim=" + std::to_string(*nd.dim) : "") + "\"];\n";
  }
  for (const auto& e : g.edges) {
    std::string label = to_string(e.move.kind);
    if (e.move.kind == MoveKind::OmegaConj)
      label += "(" + std::to_string(e.move.param) + ")";
    else
      label += "(s" + std::to_string(e.move.param) + ")";
    out += "  n" + std::to_string(e.src) + " -> n" + std::to_string(e.dst) +
           " [label=\"" + label + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace awlab
