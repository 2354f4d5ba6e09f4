#pragma once

// JSON views of verdicts, classifications and reduction graphs. Rationals
// serialize as exact fraction strings ("1/2"); elements as the round-trip
// text form t[...]*p[...].

#include <json.hpp>
#include <string>

#include "awlab/admissible.hpp"
#include "awlab/alcove.hpp"
#include "awlab/emptiness.hpp"
#include "awlab/reduction.hpp"
#include "awlab/weyl.hpp"

namespace awlab {

inline std::string rational_string(const Rat& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

inline nlohmann::json to_json(const RationalVector& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const Rat& r : v) a.push_back(rational_string(r));
  return a;
}

inline nlohmann::json to_json(const Cocharacter& lam) {
  return nlohmann::json(lam.entries());
}

inline nlohmann::json to_json(const PAlcovePair& p) {
  return nlohmann::json{{"w0", p.w0.one_line_1b()}, {"levi", p.levi.indices()}};
}

inline nlohmann::json nonempty_record(const AffWeylElt& x, const BasicClass& b,
                                      const NonemptyVerdict& v) {
  nlohmann::json w = nlohmann::json::array();
  for (const PAlcovePair& p : v.witnesses) w.push_back(to_json(p));
  return nlohmann::json{{"element", to_string(x)},
                        {"kappa_b", b.kappa},
                        {"nu_b", to_json(b.newton_vector())},
                        {"nonempty", v.nonempty},
                        {"witnesses", std::move(w)}};
}

inline nlohmann::json classify_record(const Cocharacter& lam,
                                      const ClassificationVerdict& by_criteria,
                                      const ClassificationVerdict& closed_form) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& [w, ne] : by_criteria.witnesses)
    witnesses.push_back({{"element", to_string(w)}, {"nonempty", ne}});
  return nlohmann::json{
      {"n", lam.n()},
      {"lambda", lam.entries()},
      {"by_criteria", by_criteria.is_finite_coxeter},
      {"closed_form", closed_form.is_finite_coxeter},
      {"matched_form",
       closed_form.matched_form ? nlohmann::json(to_string(*closed_form.matched_form))
                                : nlohmann::json(nullptr)},
      {"agree", by_criteria.is_finite_coxeter == closed_form.is_finite_coxeter},
      {"witnesses", std::move(witnesses)}};
}

inline nlohmann::json to_json(const ReductionGraph& g) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& nd : g.nodes)
    nodes.push_back({{"element", to_string(nd.elt)},
                     {"length", nd.length},
                     {"nonempty", nd.nonempty},
                     {"dim", nd.dim ? nlohmann::json(*nd.dim) : nlohmann::json(nullptr)}});
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges) {
    nlohmann::json move{{"kind", to_string(e.move.kind)}, {"param", e.move.param}};
    edges.push_back({{"src", e.src}, {"dst", e.dst}, {"move", std::move(move)}});
  }
  return nlohmann::json{{"root", g.root}, {"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

}  // namespace awlab
