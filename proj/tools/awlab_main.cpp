// awlab: classification, enumeration, non-emptiness and reduction-graph
// workflows for the extended affine Weyl group of GL_n.
//
// Exit codes: 0 success, 1 internal inconsistency, 2 bad input or guard
// violation.

#include <CLI11.hpp>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <thread>

#include "awlab/awlab.hpp"

namespace {

using namespace awlab;

Cocharacter read_lambda(int n, const std::vector<Int>& entries) {
  if (static_cast<int>(entries.size()) != n)
    throw guard_error("--lambda must have exactly n entries");
  return Cocharacter(entries);
}

AffWeylElt read_element(int n, const std::string& text) {
  AffWeylElt w = parse_elt(text);
  if (w.n() != n) throw guard_error("--w has rank " + std::to_string(w.n()) +
                                    ", expected " + std::to_string(n));
  return w;
}

/// Dominant vectors with entries in [-bound, bound], lexicographic order.
std::vector<Cocharacter> dominant_grid(int n, Int bound, bool central_normalize) {
  std::vector<Cocharacter> out;
  std::vector<Int> cur(static_cast<size_t>(n));
  const std::function<void(int, Int)> rec = [&](int pos, Int hi) {
    if (pos == n) {
      if (!central_normalize || cur.back() == -bound) out.emplace_back(cur);
      return;
    }
    for (Int v = hi; v >= -bound; --v) {
      cur[static_cast<size_t>(pos)] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, bound);
  std::sort(out.begin(), out.end());
  return out;
}

int cmd_classify(int n, const std::vector<Int>& lambda_in) {
  const Cocharacter lam = read_lambda(n, lambda_in);
  if (!lam.is_dominant()) throw guard_error("--lambda must be dominant (weakly decreasing)");
  const ClassificationVerdict by = classify_by_criteria(lam);
  const ClassificationVerdict cf = classify_closed_form(lam);
  const nlohmann::json rec = classify_record(lam, by, cf);
  std::cout << rec.dump() << "\n";
  return by.is_finite_coxeter == cf.is_finite_coxeter ? 0 : 1;
}

struct SweepConfig {
  int n = 2;
  Int entry_bound = 2;
  bool central_normalize = true;
  int parallelism = 1;
  std::string output;  // empty: stdout
};

int cmd_sweep(const SweepConfig& cfg) {
  if (cfg.n > rank_guard(6)) throw guard_error("sweep: rank guard exceeded (n <= 6)");
  if (cfg.entry_bound > 6) throw guard_error("sweep: entry bound guard exceeded (<= 6)");
  const std::vector<Cocharacter> grid = dominant_grid(cfg.n, cfg.entry_bound, cfg.central_normalize);
  std::vector<std::string> lines(grid.size());
  std::atomic<size_t> next{0};
  std::atomic<long> disagreements{0};
  std::atomic<long> finite_count{0};
  const auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1)) {
      const Cocharacter& lam = grid[i];
      const ClassificationVerdict by = classify_by_criteria(lam);
      const ClassificationVerdict cf = classify_closed_form(lam);
      if (by.is_finite_coxeter != cf.is_finite_coxeter) ++disagreements;
      if (by.is_finite_coxeter) ++finite_count;
      lines[i] = classify_record(lam, by, cf).dump();
    }
  };
  const int jobs = std::max(1, cfg.parallelism);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) throw guard_error("cannot open output file " + cfg.output);
    os = &file;
  }
  for (const std::string& line : lines) *os << line << "\n";
  const nlohmann::json summary{{"summary",
                                {{"count", grid.size()},
                                 {"finite_coxeter", finite_count.load()},
                                 {"disagreements", disagreements.load()}}}};
  *os << summary.dump() << "\n";
  return disagreements.load() == 0 ? 0 : 1;
}

int cmd_nonempty(int n, const std::string& w_text, Int kappa) {
  const AffWeylElt w = read_element(n, w_text);
  const BasicClass b(kappa, n);
  const NonemptyVerdict v = nonempty_basic_verdict(w, b);
  std::cout << nonempty_record(w, b, v).dump() << "\n";
  return 0;
}

int cmd_adm(int n, const std::vector<Int>& lambda_in, bool min_coset, bool coxeter_only) {
  const Cocharacter lam = read_lambda(n, lambda_in);
  if (!lam.is_dominant()) throw guard_error("--lambda must be dominant (weakly decreasing)");
  std::vector<AffWeylElt> elems = min_coset ? s_adm_circ(lam) : adm_set(lam);
  if (coxeter_only) {
    std::erase_if(elems, [](const AffWeylElt& w) { return !is_coxeter(p1(w)); });
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const AffWeylElt& w : elems)
    arr.push_back({{"element", to_string(w)}, {"length", length(w)}});
  std::cout << nlohmann::json{{"lambda", lam.entries()}, {"count", elems.size()},
                              {"elements", std::move(arr)}}.dump()
            << "\n";
  return 0;
}

int cmd_reduce(int n, const std::string& w_text, Int kappa, const std::string& dot_path,
               bool emit_json, Int depth) {
  const AffWeylElt w = read_element(n, w_text);
  const BasicClass b(kappa, n);
  const ReductionGraph g = reduction_graph(w, b, depth > 0 ? depth : length(w) + 1);
  if (!dot_path.empty()) {
    std::ofstream f(dot_path);
    if (!f) throw guard_error("cannot open DOT output file " + dot_path);
    f << export_dot(g);
  }
  if (emit_json || dot_path.empty()) std::cout << to_json(g).dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"awlab: exact combinatorics of the extended affine Weyl group of GL_n"};
  app.require_subcommand(1);

  int n = 2;
  std::vector<Int> lambda;
  std::string w_text, dot_path, out_path;
  Int kappa = 0, bound = 2, depth = 0;
  int jobs = 1;
  bool central_normalize = true, min_coset = false, coxeter_only = false, emit_json = false;

  auto* classify = app.add_subcommand("classify", "decide finite Coxeter type for one lambda");
  classify->add_option("--n", n, "rank")->required();
  classify->add_option("--lambda", lambda, "dominant cocharacter, comma separated")
      ->required()
      ->delimiter(',');

  auto* sweep = app.add_subcommand("sweep", "classify a whole dominant grid and cross-check");
  sweep->add_option("--n", n, "rank")->required();
  sweep->add_option("--bound", bound, "entry bound (entries in [-bound, bound])")->required();
  sweep->add_option("--jobs", jobs, "worker threads");
  sweep->add_flag("--central-normalize,!--no-central-normalize", central_normalize,
                  "one representative per central shift class (default on)");
  sweep->add_option("--out", out_path, "output file (default stdout)");

  auto* nonempty = app.add_subcommand("nonempty", "X_w(b) non-emptiness for basic b");
  nonempty->add_option("--n", n, "rank")->required();
  nonempty->add_option("--w", w_text, "element in t[...]*p[...] form")->required();
  nonempty->add_option("--kappa", kappa, "Kottwitz invariant of b")->required();

  auto* adm = app.add_subcommand("adm", "admissible set / minimal coset representatives");
  adm->add_option("--n", n, "rank")->required();
  adm->add_option("--lambda", lambda, "dominant cocharacter")->required()->delimiter(',');
  adm->add_flag("--min-coset", min_coset, "restrict to SAdm(lambda)^o");
  adm->add_flag("--coxeter-only", coxeter_only, "keep only Coxeter finite parts");

  auto* reduce = app.add_subcommand("reduce", "Deligne-Lusztig reduction graph");
  reduce->add_option("--n", n, "rank")->required();
  reduce->add_option("--w", w_text, "element in t[...]*p[...] form")->required();
  reduce->add_option("--kappa", kappa, "Kottwitz invariant of b")->required();
  reduce->add_option("--dot", dot_path, "write DOT to this file");
  reduce->add_option("--depth", depth, "split recursion guard (default l(w)+1)");
  reduce->add_flag("--json", emit_json, "emit the JSON graph dump to stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad usage is an input error; --help stays 0
  }

  try {
    if (classify->parsed()) return cmd_classify(n, lambda);
    if (sweep->parsed())
      return cmd_sweep({n, bound, central_normalize, jobs, out_path});
    if (nonempty->parsed()) return cmd_nonempty(n, w_text, kappa);
    if (adm->parsed()) return cmd_adm(n, lambda, min_coset, coxeter_only);
    if (reduce->parsed()) return cmd_reduce(n, w_text, kappa, dot_path, emit_json, depth);
  } catch (const awlab::guard_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const awlab::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
