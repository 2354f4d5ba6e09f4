#include <catch2/catch_amalgamated.hpp>
#include <deque>
#include <set>

#include "awlab/reduction.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace awlab;

TEST_CASE("classify_move") {
  // central translations commute with everything: Equal
  const AffWeylElt c = AffWeylElt::translation(Cocharacter{1, 1, 1});
  for (int k = 0; k < 3; ++k) REQUIRE(classify_move(c, k) == MoveClass::Equal);

  // A = eta^{-1} w_{1,r} eta splits at s_{n-1}
  for (int n = 3; n <= 5; ++n) {
    const Family f = make_family({n, 1, 1, 1});
    const AffWeylElt a = conj_by(f.w, AffWeylElt::omega_generator(n).inverse());
    REQUIRE(classify_move(a, n - 1) == MoveClass::Split);
  }

  // phi^{nu_j} tau is fixed-length under conjugation by s_{j+1}
  for (int n = 3; n <= 5; ++n) {
    const Family f = make_family({n, 1, 0, 1});
    for (int j = 1; j <= n - 2; ++j) {
      const AffWeylElt w{f.nu[static_cast<size_t>(j - 1)], Permutation::long_cycle(n)};
      REQUIRE(classify_move(w, j + 1) == MoveClass::Equal);
    }
  }

  // s_2 s_1 s_2 has length 3: Raise
  REQUIRE(classify_move(AffWeylElt::simple_reflection(3, 1), 2) == MoveClass::Raise);
}

TEST_CASE("conj_by") {
  oracle::RandomElements gen(41);
  for (int t = 0; t < 50; ++t) {
    const AffWeylElt w = gen.next(4, 3);
    REQUIRE(conj_by(w, AffWeylElt::identity(4)) == w);
  }

  // eta^{-1} w_{1,r} eta = t^{(-r,...,-r,(n-1)r+kappa)} tau
  for (int n = 3; n <= 5; ++n)
    for (const auto& [r, kappa] : std::vector<std::pair<Int, Int>>{{0, 1}, {1, 0}, {1, 1}}) {
      const Family f = make_family({n, 1, r, kappa});
      Cocharacter expect(n);
      for (int i = 0; i + 1 < n; ++i) expect[i] = -r;
      expect[n - 1] = static_cast<Int>(n - 1) * r + kappa;
      REQUIRE(conj_by(f.w, AffWeylElt::omega_generator(n).inverse()) ==
              AffWeylElt{expect, Permutation::long_cycle(n)});
    }

  // the ladder conjugator s_j...s_1 eta s_{n-1}...s_{j+1} maps
  // phi^{nu_j} tau to phi^{nu_{j+1}} tau
  for (int n = 3; n <= 5; ++n) {
    const Family f = make_family({n, 1, 1, 1});
    for (int j = 1; j <= n - 2; ++j) {
      const AffWeylElt g = fixtures::desc_run(n, j, 1) * AffWeylElt::omega_generator(n) *
                           fixtures::desc_run(n, n - 1, j + 1);
      const AffWeylElt from{f.nu[static_cast<size_t>(j - 1)], Permutation::long_cycle(n)};
      const AffWeylElt to{f.nu[static_cast<size_t>(j)], Permutation::long_cycle(n)};
      REQUIRE(conj_by(from, g) == to);
    }
  }
}

TEST_CASE("approx_equiv basics") {
  const AffWeylElt w = parse_elt("t[3,-1,-1]*p[2,3,1]");
  const auto self = approx_equiv(w, w);
  REQUIRE(self.status == ApproxStatus::Found);
  REQUIRE(self.path.empty());

  // different lengths: immediately no path
  REQUIRE(approx_equiv(AffWeylElt::identity(2), AffWeylElt::translation(Cocharacter{1, 0})).status ==
          ApproxStatus::NoPath);

  // equal length, equal kappa, but rigid: no S-conjugation preserves length
  const AffWeylElt a = parse_elt("t[0,1]*p[2,1]");
  const AffWeylElt b = parse_elt("t[2,-1]*p[2,1]");
  REQUIRE(length(a) == 2);
  REQUIRE(length(b) == 2);
  REQUIRE(approx_equiv(a, b).status == ApproxStatus::NoPath);

  // zero depth with a non-equal target reports the exceeded guard distinctly
  const AffWeylElt lhs{Cocharacter{1, 0}, Permutation(2)};
  const AffWeylElt rhs{Cocharacter{0, 1}, Permutation(2)};
  REQUIRE(approx_equiv(lhs, rhs, Int{0}).status == ApproxStatus::DepthExceeded);
  REQUIRE(approx_equiv(lhs, rhs, Int{1}).status == ApproxStatus::Found);
}

TEST_CASE("approx_equiv reproduces the ladder and the nu-family pairing") {
  {
    const auto [lhs, rhs] = fixtures::ladder_rung(4, 1, 0, 2);
    const auto res = approx_equiv(lhs, rhs);
    REQUIRE(res.status == ApproxStatus::Found);
    REQUIRE(apply_moves(lhs, res.path) == rhs);
    for (const auto& mv : res.path) REQUIRE(mv.kind == MoveKind::SimpleConjEqual);
  }
  {
    // the Coxeter strata of lambda_{1,r} pair with the phi^{nu}tau family:
    // S-conjugation alone reaches nu_j, Omega moves reach every nu_k
    const int n = 4;
    const Family f = make_family({n, 1, 0, 1});
    for (int j = 1; j <= n - 1; ++j) {
      const AffWeylElt lhs{f.lambda, fixtures::make_cj(n, j)};
      const AffWeylElt same_index{f.nu[static_cast<size_t>(j - 1)], Permutation::long_cycle(n)};
      const auto res = approx_equiv(lhs, same_index);
      REQUIRE(res.status == ApproxStatus::Found);
      REQUIRE(apply_moves(lhs, res.path) == same_index);
      const AffWeylElt mirrored{f.nu[static_cast<size_t>(n - j - 1)], Permutation::long_cycle(n)};
      const auto omega = approx_equiv(lhs, mirrored, std::nullopt, true);
      REQUIRE(omega.status == ApproxStatus::Found);
      REQUIRE(apply_moves(lhs, omega.path) == mirrored);
    }
  }
}

TEST_CASE("reduction graph terminals") {
  // length 0 with matching kappa: a single resolved node
  const ReductionGraph g0 = reduction_graph(AffWeylElt::omega_generator(3), BasicClass(1, 3), 5);
  REQUIRE(g0.nodes.size() == 1);
  REQUIRE(g0.nodes[0].nonempty);
  REQUIRE(g0.nodes[0].dim == 0);
  REQUIRE(g0.edges.empty());

  // Kottwitz mismatch: trivially empty single-node graph
  const ReductionGraph gk = reduction_graph(AffWeylElt::identity(2), BasicClass(1, 2), 5);
  REQUIRE(gk.nodes.size() == 1);
  REQUIRE(!gk.nodes[0].nonempty);

  // A_j reduces to an empty root, matching the shortcut
  const AffWeylElt aj = fixtures::make_Aj(3, 1, 1, 1);
  const ReductionGraph ga = reduction_graph(aj, BasicClass(1, 3), 20);
  REQUIRE(!ga.nodes[ga.root].nonempty);
  REQUIRE(empty_shortcut(aj, BasicClass(1, 3)));
}

TEST_CASE("reduction graph of w_{0,1} at n=2 matches the dimension formula") {
  const Family f = make_family({2, 0, 1, 1});
  const BasicClass b(1, 2);
  const ReductionGraph g = reduction_graph(f.w, b, 10);
  REQUIRE(g.nodes[g.root].nonempty);
  REQUIRE(g.nodes[g.root].dim.has_value());
  REQUIRE(*g.nodes[g.root].dim == dimension_formula(f.lambda, b).total);
  // one split: closed and open children
  std::set<MoveKind> kinds;
  for (const auto& e : g.edges) kinds.insert(e.move.kind);
  REQUIRE(kinds.contains(MoveKind::SplitClosed));
  REQUIRE(kinds.contains(MoveKind::SplitOpen));
}

TEST_CASE("split verdicts are consistent with the bundle decomposition") {
  // X_w nonempty iff X_{sws} or X_{sw} nonempty whenever l(sws) = l(w) - 2;
  // equal moves preserve the verdict.
  oracle::RandomElements gen(42);
  int splits = 0, equals = 0;
  for (int t = 0; t < 400; ++t) {
    const AffWeylElt w = gen.next(3, 2);
    const BasicClass b(kottwitz(w), 3);
    for (int k = 0; k < 3; ++k) {
      const AffWeylElt s = AffWeylElt::simple_reflection(3, k);
      const MoveClass mc = classify_move(w, k);
      if (mc == MoveClass::Equal) {
        REQUIRE(nonempty_basic(conj_by(w, s), b) == nonempty_basic(w, b));
        ++equals;
      } else if (mc == MoveClass::Split) {
        const bool ne = nonempty_basic(w, b);
        const bool child = nonempty_basic(s * w * s, b) || nonempty_basic(s * w, b);
        REQUIRE(ne == child);
        ++splits;
      }
    }
  }
  REQUIRE(splits > 50);
  REQUIRE(equals > 50);
}

TEST_CASE("ad-stable support") {
  // w_0 phi^{w_0^{-1} lambda_{1,r}} with w_0 = (1..k)(n..l): S_w = {s_{k+1},...,s_{l-2}}
  const int n = 5;
  const Family f = make_family({n, 1, 1, 1});
  const auto expect_mask = [&](int from, int to) {
    unsigned m = 0;
    for (int i = from; i <= to; ++i) m |= 1u << i;
    return m;
  };
  {
    const Permutation w0 = Permutation::cycle_1b(n, {5, 4});  // k=1, l=4
    REQUIRE(ad_stable_support(AffWeylElt{f.lambda, w0}) == expect_mask(2, 2));
  }
  {
    const Permutation w0 = Permutation::cycle_1b(n, {1, 2});  // k=2, l=5
    REQUIRE(ad_stable_support(AffWeylElt{f.lambda, w0}) == expect_mask(3, 3));
  }
  {
    const Permutation w0(n);  // k=1, l=5
    REQUIRE(ad_stable_support(AffWeylElt{f.lambda, w0}) == expect_mask(2, 3));
  }
}

TEST_CASE("non-increasing conjugation reaches length-minimal elements") {
  // BFS over w -> sws with l(sws) <= l(w) terminates at elements with no
  // decreasing move, and some minimal node decomposes as v * w' with
  // w' minimal in its coset and v supported in S_{w'}.
  oracle::RandomElements gen(43);
  for (int t = 0; t < 40; ++t) {
    const AffWeylElt start = gen.next(3, 2);
    std::set<AffWeylElt> seen{start};
    std::deque<AffWeylElt> queue{start};
    Int best = length(start);
    std::vector<AffWeylElt> minimal;
    while (!queue.empty()) {
      const AffWeylElt cur = queue.front();
      queue.pop_front();
      bool decreases = false;
      for (int k = 1; k < 3; ++k) {
        const AffWeylElt c = conj_by(cur, AffWeylElt::simple_reflection(3, k));
        if (length(c) > length(cur)) continue;
        if (length(c) < length(cur)) decreases = true;
        if (seen.insert(c).second) queue.push_back(c);
      }
      best = std::min(best, length(cur));
      if (!decreases) minimal.push_back(cur);
    }
    REQUIRE(!minimal.empty());
    bool structured = false;
    for (const AffWeylElt& x : minimal) {
      if (length(x) != best) continue;
      const AffWeylElt wprime = min_coset_rep(x);
      const AffWeylElt v = x * wprime.inverse();
      if (v.transl == Cocharacter(3) &&
          (support_mask(v.finite) & ~ad_stable_support(wprime)) == 0)
        structured = true;
    }
    REQUIRE(structured);
  }
}

TEST_CASE("graph edges respect the move bookkeeping") {
  // Equal/Omega edges preserve length and dimension; SplitClosed drops the
  // length by 2 and SplitOpen by 1; a split parent is one more than its
  // deepest nonempty child.
  const std::vector<std::pair<AffWeylElt, BasicClass>> roots = {
      {make_family({2, 0, 1, 1}).w, BasicClass(1, 2)},
      {make_family({3, 1, 0, 1}).w, BasicClass(1, 3)},
      {make_family({3, 0, 1, 1}).w, BasicClass(1, 3)}};
  for (const auto& [w, b] : roots) {
    const ReductionGraph g = reduction_graph(w, b, 100);
    for (const auto& e : g.edges) {
      const auto& src = g.nodes[static_cast<size_t>(e.src)];
      const auto& dst = g.nodes[static_cast<size_t>(e.dst)];
      switch (e.move.kind) {
        case MoveKind::SimpleConjEqual:
        case MoveKind::OmegaConj:
          REQUIRE(src.length == dst.length);
          REQUIRE(src.nonempty == dst.nonempty);
          if (src.dim && dst.dim) REQUIRE(*src.dim == *dst.dim);
          break;
        case MoveKind::SplitClosed:
          REQUIRE(src.length - dst.length == 2);
          break;
        case MoveKind::SplitOpen:
          REQUIRE(src.length - dst.length == 1);
          break;
      }
    }
    // split parents: dim = 1 + max over nonempty children
    for (size_t i = 0; i < g.nodes.size(); ++i) {
      std::vector<const ReductionGraph::Node*> children;
      for (const auto& e : g.edges)
        if (static_cast<size_t>(e.src) == i &&
            (e.move.kind == MoveKind::SplitClosed || e.move.kind == MoveKind::SplitOpen))
          children.push_back(&g.nodes[static_cast<size_t>(e.dst)]);
      if (children.empty() || !g.nodes[i].dim) continue;
      Int expect = -1;
      bool resolved = true;
      for (const auto* c : children) {
        if (!c->nonempty) continue;
        if (!c->dim) resolved = false;
        else expect = std::max(expect, *c->dim + 1);
      }
      if (resolved) REQUIRE(*g.nodes[i].dim == expect);
    }
  }
}

TEST_CASE("graph dimensions match the formula on the small families") {
  // max over the Coxeter strata of the root dimension = dim X_lambda(b),
  // wherever the graphs resolve (kappa = 0 bottoms out at positive-length
  // basic elements and stays unresolved by design).
  int resolved_cases = 0;
  for (int n : {2, 3})
    for (int i : {0, 1})
      for (const auto& [r, kappa] : std::vector<std::pair<Int, Int>>{{0, 1}, {1, 1}}) {
        const Family f = make_family({n, i, r, kappa});
        const BasicClass b(f.lambda.sum(), n);
        Int best = -1;
        bool all_resolved = true;
        for (const AffWeylElt& w : s_adm_circ_cox(f.lambda)) {
          const ReductionGraph g = reduction_graph(w, b, 200);
          const auto& root = g.nodes[static_cast<size_t>(g.root)];
          if (!root.dim) {
            all_resolved = false;
            continue;
          }
          best = std::max(best, *root.dim);
        }
        if (all_resolved) {
          REQUIRE(best == dimension_formula(f.lambda, b).total);
          ++resolved_cases;
        }
      }
  REQUIRE(resolved_cases == 8);
}

TEST_CASE("dot export") {
  const ReductionGraph empty{};
  const std::string skel = export_dot(empty);
  REQUIRE(skel.starts_with("digraph"));
  REQUIRE(skel.find('}') != std::string::npos);

  const ReductionGraph g0 = reduction_graph(AffWeylElt::omega_generator(2), BasicClass(1, 2), 5);
  const std::string one = export_dot(g0);
  REQUIRE(one.find("t[1,0]*p[2,1]") != std::string::npos);
  REQUIRE(one.find("dim=0") != std::string::npos);

  const Family f = make_family({2, 0, 1, 1});
  const std::string dot = export_dot(reduction_graph(f.w, BasicClass(1, 2), 10));
  REQUIRE(dot.find("SplitClosed") != std::string::npos);
  REQUIRE(dot.find("SplitOpen") != std::string::npos);
}
