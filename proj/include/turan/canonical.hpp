#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// Canonical label: header byte 63+n followed by the graph6 bit packing of
// the canonically relabeled graph.  Equal labels iff isomorphic.
using CanonicalLabel = std::string;

namespace detail {

inline CanonicalLabel encode_by_order(const SmallGraph& g, const std::vector<int>& order) {
  // order[i] = original vertex placed at position i
  const int n = g.order();
  std::string out;
  out += static_cast<char>(63 + n);
  int acc = 0, bits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(order[u], order[v]) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        bits = 0;
      }
    }
  if (bits > 0) out += static_cast<char>(63 + (acc << (6 - bits)));
  return out;
}

inline CanonicalLabel brute_force_canonical(const SmallGraph& g) {
  const int n = g.order();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  CanonicalLabel best = encode_by_order(g, order);
  while (std::next_permutation(order.begin(), order.end())) {
    CanonicalLabel cand = encode_by_order(g, order);
    if (cand < best) best = cand;
  }
  return best;
}

using Partition = std::vector<std::vector<int>>;

// Equitable refinement: split cells by neighbor counts into every cell
// until stable.  Subcell order within a split is by increasing count, so
// the refined partition is an isomorphism invariant of the input partition.
inline void refine(const SmallGraph& g, Partition& part) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < part.size() && !changed; ++s) {
      std::uint64_t splitter = 0;
      for (int v : part[s]) splitter |= std::uint64_t{1} << v;
      for (std::size_t a = 0; a < part.size(); ++a) {
        if (part[a].size() < 2) continue;
        auto count = [&](int v) { return std::popcount(g.neighbors(v) & splitter); };
        const int c0 = count(part[a][0]);
        bool uniform = true;
        for (int v : part[a])
          if (count(v) != c0) {
            uniform = false;
            break;
          }
        if (uniform) continue;
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(part[a].size());
        for (int v : part[a]) keyed.emplace_back(count(v), v);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; });
        Partition sub;
        for (const auto& [c, v] : keyed) {
          if (sub.empty() || count(sub.back()[0]) != c) sub.push_back({});
          sub.back().push_back(v);
        }
        part.erase(part.begin() + static_cast<long>(a));
        part.insert(part.begin() + static_cast<long>(a), sub.begin(), sub.end());
        changed = true;
        break;
      }
    }
  }
}

// True when every cell is internally empty or complete and every pair of
// cells is fully joined or fully disjoint; then the partition alone fixes
// the canonical order and no branching is needed.
inline bool cells_trivial(const SmallGraph& g, const Partition& part) {
  std::vector<std::uint64_t> masks(part.size(), 0);
  for (std::size_t i = 0; i < part.size(); ++i)
    for (int v : part[i]) masks[i] |= std::uint64_t{1} << v;
  for (std::size_t i = 0; i < part.size(); ++i) {
    const int sz = static_cast<int>(part[i].size());
    if (sz >= 2) {
      const int d0 = std::popcount(g.neighbors(part[i][0]) & masks[i]);
      if (d0 != 0 && d0 != sz - 1) return false;
      for (int v : part[i])
        if (std::popcount(g.neighbors(v) & masks[i]) != d0) return false;
    }
    for (std::size_t j = i + 1; j < part.size(); ++j) {
      const int tgt = static_cast<int>(part[j].size());
      const int c0 = std::popcount(g.neighbors(part[i][0]) & masks[j]);
      if (c0 != 0 && c0 != tgt) return false;
      for (int v : part[i])
        if (std::popcount(g.neighbors(v) & masks[j]) != c0) return false;
    }
  }
  return true;
}

inline void canon_search(const SmallGraph& g, Partition part, CanonicalLabel& best,
                         bool& have_best) {
  refine(g, part);
  // locate branching cell: first cell of minimal size > 1
  std::size_t target = part.size();
  std::size_t min_sz = ~std::size_t{0};
  for (std::size_t i = 0; i < part.size(); ++i)
    if (part[i].size() > 1 && part[i].size() < min_sz) {
      min_sz = part[i].size();
      target = i;
    }
  if (target == part.size() || cells_trivial(g, part)) {
    std::vector<int> order;
    for (const auto& cell : part) order.insert(order.end(), cell.begin(), cell.end());
    CanonicalLabel cand = encode_by_order(g, order);
    if (!have_best || cand < best) {
      best = std::move(cand);
      have_best = true;
    }
    return;
  }
  for (int v : part[target]) {
    Partition next = part;
    std::vector<int> rest;
    for (int u : part[target])
      if (u != v) rest.push_back(u);
    next[target] = {v};
    next.insert(next.begin() + static_cast<long>(target) + 1, std::move(rest));
    canon_search(g, std::move(next), best, have_best);
  }
}

}  // namespace detail

inline CanonicalLabel canonical_form(const SmallGraph& g) {
  const int n = g.order();
  if (n <= 7) return detail::brute_force_canonical(g);
  detail::Partition part;
  part.push_back(std::vector<int>(static_cast<std::size_t>(n)));
  std::iota(part[0].begin(), part[0].end(), 0);
  CanonicalLabel best;
  bool have_best = false;
  detail::canon_search(g, std::move(part), best, have_best);
  return best;
}

}  // namespace turan
