#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hamcert/certify.hpp"
#include "hamcert/closure.hpp"
#include "hamcert/errors.hpp"
#include "hamcert/families.hpp"
#include "hamcert/graph.hpp"
#include "hamcert/graph6.hpp"
#include "hamcert/hamilton.hpp"
#include "hamcert/random.hpp"
#include "hamcert/spectral.hpp"

namespace hamcert {

inline constexpr int kMaxExhaustiveOrder = 7;
inline constexpr int kMaxClosureCheckOrder = 10;

// ---------------------------------------------------------------------------
// Enumeration

inline std::uint64_t labeled_graph_count(int n) {
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

// Graph whose edge set is given by `mask` over pairs in graph6 order:
// bit 0 = (0,1), bit 1 = (0,2), bit 2 = (1,2), bit 3 = (0,3), ...
inline Graph labeled_graph(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k)
      if ((mask >> k) & 1U) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

inline void check_exhaustive_order(int n) {
  if (n < 1) throw InputError("order must be at least 1");
  if (n > kMaxExhaustiveOrder) {
    throw CapacityError("exhaustive enumeration is limited to n <= " +
                        std::to_string(kMaxExhaustiveOrder) + "; use random sampling for n = " +
                        std::to_string(n));
  }
}

// Visits all 2^C(n,2) labeled graphs on n vertices in edge-mask order.
template <typename Visitor>
void enumerate_labeled(int n, Visitor&& visit) {
  check_exhaustive_order(n);
  const std::uint64_t count = labeled_graph_count(n);
  for (std::uint64_t mask = 0; mask < count; ++mask) visit(labeled_graph(n, mask));
}

// Minimum graph6 string over all vertex permutations. Exponential; n <= 7.
inline std::string canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kMaxExhaustiveOrder) throw CapacityError("canonical form is limited to n <= 7");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best = write_graph6(g);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::string s = write_graph6(g.relabeled(perm));
    if (s < best) best = std::move(s);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Validation

// Corpus means a caller-supplied list of graphs (e.g. a graph6 file).
enum class ValidationMode { ExhaustiveLabeled, RandomSample, Corpus };

inline const char* to_string(ValidationMode m) {
  switch (m) {
    case ValidationMode::ExhaustiveLabeled: return "ExhaustiveLabeled";
    case ValidationMode::RandomSample: return "RandomSample";
    case ValidationMode::Corpus: return "Corpus";
  }
  return "?";
}

struct ValidationBudget {
  int samples = 1000;        // per order, RandomSample mode
  double edge_probability = 0.5;
  std::uint64_t seed = 1;
  int workers = 1;
  int oracle_cap = kDefaultOracleCap;
};

struct ValidationReport {
  std::string criterion;  // criterion id, or "closure"
  std::vector<int> orders;
  ValidationMode mode = ValidationMode::ExhaustiveLabeled;
  std::int64_t graphs_checked = 0;
  std::int64_t predictions_issued = 0;
  std::int64_t exceptions_matched = 0;
  std::vector<std::string> violations;  // graph6, sorted
  std::int64_t boundary_cases = 0;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return violations.empty(); }
};

namespace detail {

struct Tally {
  std::int64_t checked = 0;
  std::int64_t predictions = 0;
  std::int64_t exceptions = 0;
  std::int64_t boundary = 0;
  std::vector<std::string> violations;

  void merge(Tally&& other) {
    checked += other.checked;
    predictions += other.predictions;
    exceptions += other.exceptions;
    boundary += other.boundary;
    violations.insert(violations.end(), std::make_move_iterator(other.violations.begin()),
                      std::make_move_iterator(other.violations.end()));
  }
};

// Splits [0, count) into contiguous chunks, one per worker, and merges the
// per-chunk tallies. Results do not depend on the worker count.
inline Tally run_partitioned(std::uint64_t count, int workers,
                             const std::function<void(std::uint64_t, Tally&)>& work) {
  workers = std::max(1, workers);
  if (static_cast<std::uint64_t>(workers) > count)
    workers = static_cast<int>(std::max<std::uint64_t>(count, 1));
  std::vector<Tally> parts(workers);
  auto chunk = [&](int w) {
    const std::uint64_t lo = count * w / workers;
    const std::uint64_t hi = count * (w + 1) / workers;
    for (std::uint64_t i = lo; i < hi; ++i) work(i, parts[w]);
  };
  if (workers == 1) {
    chunk(0);
  } else {
    std::vector<std::jthread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(chunk, w);
  }
  Tally total;
  for (auto& p : parts) total.merge(std::move(p));
  std::sort(total.violations.begin(), total.violations.end());
  return total;
}

// Materialized corpus for one order: either all labeled graphs (generated on
// demand from the index) or a fixed random sample.
struct Corpus {
  int n = 0;
  std::vector<Graph> sample;
  bool exhaustive = false;

  std::uint64_t size() const { return exhaustive ? labeled_graph_count(n) : sample.size(); }
  Graph at(std::uint64_t i) const { return exhaustive ? labeled_graph(n, i) : sample[i]; }
};

inline Corpus make_corpus(int n, ValidationMode mode, const ValidationBudget& budget) {
  Corpus c;
  c.n = n;
  if (mode == ValidationMode::ExhaustiveLabeled) {
    check_exhaustive_order(n);
    c.exhaustive = true;
  } else {
    // Seed per order so adding an order never changes the others' samples.
    c.sample = sample_random(n, budget.edge_probability, budget.samples,
                             budget.seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(n)));
  }
  return c;
}

inline void check_oracle_orders(const std::vector<int>& orders, int cap) {
  for (int n : orders) {
    if (n > cap) {
      throw CapacityError("order " + std::to_string(n) + " exceeds the oracle cap of " +
                          std::to_string(cap));
    }
  }
}

inline ValidationReport validate_corpora(CriterionId criterion, const std::vector<Corpus>& corpora,
                                         ValidationMode mode, const ValidationBudget& budget,
                                         const CriterionOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  ValidationReport report;
  report.criterion = to_string(criterion);
  report.mode = mode;

  Tally total;
  for (const Corpus& corpus : corpora) {
    total.merge(run_partitioned(
        corpus.size(), budget.workers, [&](std::uint64_t i, Tally& t) {
          const Graph g = corpus.at(i);
          const CriterionVerdict v = apply_criterion(g, criterion, opts);
          ++t.checked;
          if (std::abs(v.lhs - v.threshold) <= kCriterionTolerance) ++t.boundary;
          if (v.exception) ++t.exceptions;
          if (v.predicted == Prediction::NoPrediction) return;
          ++t.predictions;
          const HamiltonProfile oracle = hamilton_profile(g, budget.oracle_cap);
          if (!verdict_is_sound(g, v, oracle)) t.violations.push_back(write_graph6(g));
        }));
  }
  std::sort(total.violations.begin(), total.violations.end());

  report.graphs_checked = total.checked;
  report.predictions_issued = total.predictions;
  report.exceptions_matched = total.exceptions;
  report.boundary_cases = total.boundary;
  report.violations = std::move(total.violations);
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

inline void check_criterion_orders(CriterionId criterion, const std::vector<int>& orders) {
  for (int n : orders) {
    if (n < minimum_order(criterion)) {
      throw InputError(std::string("criterion ") + to_string(criterion) +
                       " requires order n >= " + std::to_string(minimum_order(criterion)) +
                       ", got " + std::to_string(n));
    }
  }
}

}  // namespace detail

// Applies the criterion to every graph of the corpus; whenever it issues a
// prediction without an exception, the exact oracle must confirm it. The
// oracle is only consulted for graphs that received a prediction. Graphs
// within 1e-9 of the threshold are counted as boundary cases; they are never
// violations by themselves.
inline ValidationReport validate(CriterionId criterion, const std::vector<int>& orders,
                                 ValidationMode mode, const ValidationBudget& budget = {},
                                 const CriterionOptions& opts = {}) {
  if (mode == ValidationMode::Corpus)
    throw InputError("corpus validation takes a graph list; use validate_corpus");
  detail::check_oracle_orders(orders, budget.oracle_cap);
  detail::check_criterion_orders(criterion, orders);
  std::vector<detail::Corpus> corpora;
  for (int n : orders) corpora.push_back(detail::make_corpus(n, mode, budget));
  ValidationReport report = detail::validate_corpora(criterion, corpora, mode, budget, opts);
  report.orders = orders;
  return report;
}

inline ValidationReport validate_corpus(CriterionId criterion, std::vector<Graph> graphs,
                                        const ValidationBudget& budget = {},
                                        const CriterionOptions& opts = {}) {
  std::vector<int> orders;
  for (const Graph& g : graphs) orders.push_back(g.order());
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  detail::check_oracle_orders(orders, budget.oracle_cap);
  detail::check_criterion_orders(criterion, orders);
  detail::Corpus corpus;
  corpus.sample = std::move(graphs);
  ValidationReport report =
      detail::validate_corpora(criterion, {corpus}, ValidationMode::Corpus, budget, opts);
  report.orders = orders;
  return report;
}

// Checks, per graph, that g and its closures agree on: Hamiltonian path
// (k = n-1), Hamiltonian cycle (k = n), Hamilton-connectedness (k = n+1).
// predictions_issued counts graphs where at least one closure added edges.
inline ValidationReport validate_closure_equivalence(const std::vector<int>& orders,
                                                     ValidationMode mode,
                                                     const ValidationBudget& budget = {}) {
  const auto start = std::chrono::steady_clock::now();
  for (int n : orders) {
    if (n > kMaxClosureCheckOrder)
      throw CapacityError("closure equivalence checks are limited to n <= 10");
  }
  detail::check_oracle_orders(orders, budget.oracle_cap);
  ValidationReport report;
  report.criterion = "closure";
  report.orders = orders;
  report.mode = mode;

  detail::Tally total;
  for (int n : orders) {
    const detail::Corpus corpus = detail::make_corpus(n, mode, budget);
    total.merge(detail::run_partitioned(
        corpus.size(), budget.workers, [&](std::uint64_t i, detail::Tally& t) {
          const Graph g = corpus.at(i);
          ++t.checked;
          const HamiltonProfile base = hamilton_profile(g, budget.oracle_cap);
          const ClosureResult cp = k_closure(g, n - 1);
          const ClosureResult cc = k_closure(g, n);
          const ClosureResult ch = k_closure(g, n + 1);
          if (!cp.added.empty() || !cc.added.empty() || !ch.added.empty()) ++t.predictions;
          const bool ok =
              base.has_path == hamilton_profile(cp.graph, budget.oracle_cap).has_path &&
              base.has_cycle == hamilton_profile(cc.graph, budget.oracle_cap).has_cycle &&
              base.hamilton_connected ==
                  hamilton_profile(ch.graph, budget.oracle_cap).hamilton_connected;
          if (!ok) t.violations.push_back(write_graph6(g));
        }));
  }
  std::sort(total.violations.begin(), total.violations.end());

  report.graphs_checked = total.checked;
  report.predictions_issued = total.predictions;
  report.violations = std::move(total.violations);
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

// ---------------------------------------------------------------------------
// Remark family (K_r + K_r) join K_s

// Largest root of an upward quadratic a x^2 + b x + c by bisection between its
// vertex and `hi`, stopping at interval width 1e-10.
inline double largest_quadratic_root(double a, double b, double c, double hi) {
  auto f = [&](double x) { return (a * x + b) * x + c; };
  double lo = -b / (2 * a);
  if (f(lo) > 0) return std::nan("");
  while (f(hi) < 0) hi *= 2;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

struct RemarkRow {
  int r = 0;
  int s = 0;
  int n = 0;
  std::int64_t f_at_n_minus_2 = 0;   // f(x) = (x-(r-1))(x-(s-1)) - 2rs
  std::int64_t g_at_2n_minus_4 = 0;  // g(x) = (x-(2r+s-2))(x-(2r+2s-2)) - 2rs
  double mu = 0.0;
  double gamma = 0.0;
  double f_root = 0.0;  // largest root of f
  double g_root = 0.0;  // largest root of g
  bool mu_below = false;     // mu < n - 2
  bool gamma_above = false;  // gamma >= 2(n-2)
  std::optional<bool> oracle_has_cycle;
};

struct RemarkScan {
  std::vector<RemarkRow> rows;
  std::vector<std::string> notes;  // omitted parameter choices and why
};

inline std::int64_t remark_f(std::int64_t r, std::int64_t s, std::int64_t x) {
  return (x - (r - 1)) * (x - (s - 1)) - 2 * r * s;
}

inline std::int64_t remark_g(std::int64_t r, std::int64_t s, std::int64_t x) {
  return (x - (2 * r + s - 2)) * (x - (2 * r + 2 * s - 2)) - 2 * r * s;
}

// Rows for every admissible s in [2(r-1)^2, (2r-1)(r-1)) and r in
// [r_min, r_max]. The oracle column is filled only when n <= oracle_cap.
inline RemarkScan remark_scan(int r_min, int r_max, int oracle_cap = kDefaultOracleCap) {
  if (r_min < 2) throw InputError("remark family requires r >= 2");
  RemarkScan scan;
  for (int r = r_min; r <= r_max; ++r) {
    const int s_lo = 2 * (r - 1) * (r - 1);
    const int s_hi = (2 * r - 1) * (r - 1);
    if (s_lo >= s_hi) {
      scan.notes.push_back("r=" + std::to_string(r) + ": empty admissible window");
      continue;
    }
    for (int s = s_lo; s < s_hi; ++s) {
      const int n = 2 * r + s;
      if (n > kMaxOrder) {
        scan.notes.push_back("r=" + std::to_string(r) + ", s=" + std::to_string(s) +
                             ": order " + std::to_string(n) + " exceeds the graph size limit");
        continue;
      }
      const Graph g = construct(family::RemarkFamily{r, s});
      RemarkRow row;
      row.r = r;
      row.s = s;
      row.n = n;
      row.f_at_n_minus_2 = remark_f(r, s, n - 2);
      row.g_at_2n_minus_4 = remark_g(r, s, 2 * (n - 2));
      row.mu = adjacency_radius(g);
      row.gamma = signless_radius(g);
      // f(x) = x^2 - (r+s-2) x + (r-1)(s-1) - 2rs, and likewise for g.
      row.f_root = largest_quadratic_root(1.0, -(r - 1.0) - (s - 1.0),
                                          (r - 1.0) * (s - 1.0) - 2.0 * r * s, 2.0 * n);
      const double g1 = 2.0 * r + s - 2;
      const double g2 = 2.0 * r + 2.0 * s - 2;
      row.g_root = largest_quadratic_root(1.0, -(g1 + g2), g1 * g2 - 2.0 * r * s, 2.0 * n);
      row.mu_below = row.mu < n - 2 - kBoundTolerance;
      row.gamma_above = row.gamma >= 2.0 * (n - 2) - kBoundTolerance;
      if (n <= oracle_cap) row.oracle_has_cycle = hamilton_profile(g, oracle_cap).has_cycle;
      scan.rows.push_back(row);
    }
  }
  return scan;
}

}  // namespace hamcert
