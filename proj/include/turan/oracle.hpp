#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "turan/canonical.hpp"
#include "turan/embedding.hpp"
#include "turan/formulas.hpp"
#include "turan/forest.hpp"
#include "turan/graph.hpp"

namespace turan {

struct OracleOptions {
  bool enumerate_all = false;
  std::optional<long long> bound_hint;  // certified F-free lower bound
  int workers = 1;
  std::chrono::milliseconds timeout{300000};
};

struct OracleResult {
  int n = 0;
  long long max_edges = -1;
  // one representative per isomorphism class, keyed and ordered by label
  std::vector<std::pair<CanonicalLabel, SmallGraph>> extremal;
  long long nodes_explored = 0;
  long long pruned_by_bound = 0;
  long long pruned_by_containment = 0;
  double elapsed_seconds = 0;
  bool timed_out = false;
};

namespace detail {

// Edge slots in graph6 column-major order, so all slots inside the first
// v vertices precede every slot touching vertex v.
inline std::vector<std::pair<int, int>> edge_slots(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) slots.emplace_back(u, v);
  return slots;
}

// For a forest of paths (P3 counted via S2), any graph containing
// P_{total} contains F, so the Erdos-Gallai bound on P_{total} caps the
// edge count of every F-free graph.
inline long long global_edge_cap(const ForestSpec& spec, int n) {
  for (const auto& c : spec.components())
    if (c.kind == TreeKind::Star && c.size != 2) return -1;
  const int total = spec.total_vertices();
  if (total < 2) return -1;
  return eg_path_bound(total, n);
}

struct OracleSearch {
  const ForestSpec& spec;
  const std::vector<std::pair<int, int>>& slots;
  int n;
  bool enumerate_all;
  long long lower_bound;     // certified achievable edge count, or -1
  long long cap;             // global cap on F-free edge counts, or -1
  int memo_cutoff;           // slot index where prefix memoization fires
  int prefix_order;          // vertices covered by the memo prefix
  std::chrono::steady_clock::time_point deadline;

  SmallGraph g;
  long long best = -1;
  std::map<CanonicalLabel, SmallGraph> found;
  std::unordered_set<CanonicalLabel> seen_prefixes;
  long long nodes = 0, pruned_bound = 0, pruned_contain = 0;
  bool timed_out = false;

  OracleSearch(const ForestSpec& s, const std::vector<std::pair<int, int>>& sl, int nn,
               const OracleOptions& opt, long long edge_cap,
               std::chrono::steady_clock::time_point dl)
      : spec(s),
        slots(sl),
        n(nn),
        enumerate_all(opt.enumerate_all),
        lower_bound(opt.bound_hint.value_or(-1)),
        cap(edge_cap),
        deadline(dl),
        g(nn) {
    prefix_order = (n + 1) / 2;
    memo_cutoff = prefix_order * (prefix_order - 1) / 2;
    if (memo_cutoff <= 2 || memo_cutoff >= static_cast<int>(slots.size())) memo_cutoff = -1;
  }

  void record_leaf(long long cur) {
    if (cur < best) return;
    if (cur > best) {
      best = cur;
      found.clear();
    } else if (!enumerate_all) {
      return;
    }
    found.emplace(canonical_form(g), g);
  }

  void dfs(int i, long long cur) {
    if (timed_out) return;
    if ((++nodes & 0x1fff) == 0 && std::chrono::steady_clock::now() > deadline) {
      timed_out = true;
      return;
    }
    const long long rem = static_cast<long long>(slots.size()) - i;
    long long potential = cur + rem;
    if (cap >= 0 && cap < potential) potential = cap;
    const long long need = best > lower_bound ? best : lower_bound;
    if (potential < need || (potential == need && !enumerate_all && best >= need)) {
      ++pruned_bound;
      return;
    }
    if (i == static_cast<int>(slots.size())) {
      record_leaf(cur);
      return;
    }
    if (i == memo_cutoff) {
      auto label = canonical_form(g.induced((std::uint64_t{1} << prefix_order) - 1));
      if (!seen_prefixes.insert(std::move(label)).second) return;
    }
    const auto [u, v] = slots[i];
    g.add_edge(u, v);
    if (find_embedding(g, spec)) {
      ++pruned_contain;
    } else {
      dfs(i + 1, cur + 1);
    }
    g.remove_edge(u, v);
    dfs(i + 1, cur);
  }
};

}  // namespace detail

// Exact ex(n, F) by depth-first search over edge slots, pruning branches
// whose partial graph already contains F and branches that cannot beat
// the best known bound.  Deterministic, including across worker counts.
inline OracleResult exact_turan(const ForestSpec& spec, int n, const OracleOptions& opt = {}) {
  if (n < 0 || n > SmallGraph::kMaxVertices) throw CapacityError("exact_turan: bad n");
  const auto t0 = std::chrono::steady_clock::now();
  const auto deadline = t0 + opt.timeout;
  const auto slots = detail::edge_slots(n);
  const long long cap = detail::global_edge_cap(spec, n > 0 ? n : 1);

  // static split over the first two slots; each subproblem is searched
  // independently so the merged result cannot depend on scheduling
  const int split = static_cast<int>(slots.size()) >= 2 ? 2 : static_cast<int>(slots.size());
  const int num_sub = 1 << split;
  std::vector<std::unique_ptr<detail::OracleSearch>> subs;
  for (int sid = 0; sid < num_sub; ++sid)
    subs.push_back(std::make_unique<detail::OracleSearch>(spec, slots, n, opt, cap, deadline));

  auto run_sub = [&](int sid) {
    auto& s = *subs[sid];
    long long cur = 0;
    for (int i = 0; i < split; ++i) {
      if ((sid >> i) & 1) {
        const auto [u, v] = slots[i];
        s.g.add_edge(u, v);
        ++cur;
        if (find_embedding(s.g, spec)) {
          ++s.pruned_contain;
          return;
        }
      }
    }
    s.dfs(split, cur);
  };

  const int workers = opt.workers < 1 ? 1 : opt.workers;
  if (workers == 1) {
    for (int sid = 0; sid < num_sub; ++sid) run_sub(sid);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers && w < num_sub; ++w)
      pool.emplace_back([&, w] {
        for (int sid = w; sid < num_sub; sid += workers) run_sub(sid);
      });
    for (auto& t : pool) t.join();
  }

  OracleResult res;
  res.n = n;
  for (int sid = 0; sid < num_sub; ++sid) {
    if (subs[sid]->best > res.max_edges) res.max_edges = subs[sid]->best;
    res.nodes_explored += subs[sid]->nodes;
    res.pruned_by_bound += subs[sid]->pruned_bound;
    res.pruned_by_containment += subs[sid]->pruned_contain;
    res.timed_out = res.timed_out || subs[sid]->timed_out;
  }
  std::map<CanonicalLabel, SmallGraph> merged;
  for (int sid = 0; sid < num_sub; ++sid)
    if (subs[sid]->best == res.max_edges)
      for (auto& [label, graph] : subs[sid]->found) merged.emplace(label, graph);
  for (auto& [label, graph] : merged) res.extremal.emplace_back(label, graph);
  res.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

enum class Verdict { Match, BelowThreshold, BoundOnly };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Match: return "match";
    case Verdict::BelowThreshold: return "below-threshold";
    case Verdict::BoundOnly: return "bound-only";
  }
  return "?";
}

struct VerificationRow {
  int n = 0;
  long long formula_value = 0;
  long long construction_edges = 0;
  std::optional<long long> oracle_value;
  Verdict verdict = Verdict::BoundOnly;
  // oracle = formula rows only: extremal classes == {construction}?
  std::optional<bool> construction_unique;
  bool timed_out = false;
};

struct VerificationReport {
  std::vector<VerificationRow> rows;
  // smallest n with oracle = formula such that equality persists to the
  // last oracle-checked n; never extrapolated beyond the scan
  std::optional<int> detected_threshold;
  int oracle_scan_limit = 0;
};

inline VerificationReport verify_range(const ForestSpec& spec, int n_from, int n_to,
                                       int oracle_cap, const OracleOptions& base = {}) {
  if (n_from < spec.total_vertices())
    throw DomainError("verify_range: n_from below the order of F");
  VerificationReport rep;
  for (int n = n_from; n <= n_to; ++n) {
    VerificationRow row;
    row.n = n;
    row.formula_value = turan_formula(spec, n).value;
    const auto cons = extremal_construction(spec, n);
    if (find_embedding(cons.graph, spec))
      throw Error("verify_range: construction contains F; bug signal");
    row.construction_edges = cons.graph.edge_count();
    if (n <= oracle_cap) {
      OracleOptions opt = base;
      opt.enumerate_all = true;
      opt.bound_hint = row.construction_edges;
      const auto oracle = exact_turan(spec, n, opt);
      if (oracle.timed_out) {
        row.timed_out = true;
        row.verdict = Verdict::BoundOnly;
      } else {
        row.oracle_value = oracle.max_edges;
        row.verdict = oracle.max_edges == row.formula_value ? Verdict::Match
                                                            : Verdict::BelowThreshold;
        if (row.verdict == Verdict::Match) {
          const auto cons_label = canonical_form(cons.graph);
          row.construction_unique =
              oracle.extremal.size() == 1 && oracle.extremal.front().first == cons_label;
        }
        rep.oracle_scan_limit = n;
      }
    }
    rep.rows.push_back(std::move(row));
  }
  // threshold: longest Match suffix of the oracle-checked prefix
  std::optional<int> thr;
  for (auto it = rep.rows.rbegin(); it != rep.rows.rend(); ++it) {
    if (!it->oracle_value) continue;
    if (it->verdict == Verdict::Match)
      thr = it->n;
    else
      break;
  }
  rep.detected_threshold = thr;
  return rep;
}

}  // namespace turan
