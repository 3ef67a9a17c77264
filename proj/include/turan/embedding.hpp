#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "turan/forest.hpp"
#include "turan/graph.hpp"

namespace turan {

// Injective edge-preserving placement of a forest in a host graph.
// assignments[i] lists host vertices for spec component i: a path in
// traversal order, or a star center followed by its leaves.
struct Embedding {
  std::vector<std::vector<int>> assignments;
};

inline bool validate_embedding(const SmallGraph& g, const ForestSpec& spec,
                               const Embedding& emb) {
  if (emb.assignments.size() != spec.components().size()) return false;
  std::uint64_t used = 0;
  for (std::size_t i = 0; i < emb.assignments.size(); ++i) {
    const auto& comp = spec.components()[i];
    const auto& vs = emb.assignments[i];
    if (static_cast<int>(vs.size()) != comp.vertex_count()) return false;
    for (int v : vs) {
      if (v < 0 || v >= g.order()) return false;
      if ((used >> v) & 1u) return false;
      used |= std::uint64_t{1} << v;
    }
    if (comp.kind == TreeKind::Path) {
      for (std::size_t j = 0; j + 1 < vs.size(); ++j)
        if (!g.has_edge(vs[j], vs[j + 1])) return false;
    } else {
      for (std::size_t j = 1; j < vs.size(); ++j)
        if (!g.has_edge(vs[0], vs[j])) return false;
    }
  }
  return true;
}

namespace detail {

// class_id[v] groups vertices whose transposition is a host automorphism
// (N(u) and N(v) agree off {u,v}); interchangeable in any embedding.
inline std::vector<int> twin_classes(const SmallGraph& g) {
  const int n = g.order();
  std::vector<int> cls(n, -1);
  std::vector<int> reps;
  for (int v = 0; v < n; ++v) {
    for (std::size_t c = 0; c < reps.size(); ++c) {
      const int r = reps[c];
      const std::uint64_t off = ~((std::uint64_t{1} << v) | (std::uint64_t{1} << r));
      if ((g.neighbors(v) & off) == (g.neighbors(r) & off)) {
        cls[v] = static_cast<int>(c);
        break;
      }
    }
    if (cls[v] < 0) {
      cls[v] = static_cast<int>(reps.size());
      reps.push_back(v);
    }
  }
  return cls;
}

struct EmbedSearch {
  const SmallGraph& g;
  std::vector<TreeComponent> comps;   // search order: decreasing vertex count
  std::vector<int> spec_index;        // comps[i] is spec component spec_index[i]
  std::vector<int> cls;
  std::uint64_t used = 0;
  std::vector<std::vector<int>> placed;  // per search-order component
  std::vector<int> anchors;              // first host vertex chosen per component

  explicit EmbedSearch(const SmallGraph& host, const ForestSpec& spec) : g(host) {
    const auto& cs = spec.components();
    std::vector<int> idx(cs.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      return cs[a].vertex_count() > cs[b].vertex_count();
    });
    for (int i : idx) {
      comps.push_back(cs[i]);
      spec_index.push_back(i);
    }
    cls = twin_classes(host);
    placed.resize(comps.size());
    anchors.assign(comps.size(), -1);
  }

  bool place_component(std::size_t ci) {
    if (ci == comps.size()) return true;
    const auto& comp = comps[ci];
    // identical consecutive components: anchors strictly increasing
    const int min_anchor =
        (ci > 0 && comps[ci - 1] == comp) ? anchors[ci - 1] + 1 : 0;
    std::uint64_t tried_cls = 0;
    for (int v = min_anchor; v < g.order(); ++v) {
      if ((used >> v) & 1u) continue;
      if ((tried_cls >> cls[v]) & 1u) continue;
      tried_cls |= std::uint64_t{1} << cls[v];
      anchors[ci] = v;
      if (comp.kind == TreeKind::Path) {
        used |= std::uint64_t{1} << v;
        placed[ci] = {v};
        if (extend_path(ci, comp.size)) return true;
        used &= ~(std::uint64_t{1} << v);
      } else {
        if (std::popcount(g.neighbors(v) & ~used & ~(std::uint64_t{1} << v) &
                          g.vertex_mask()) < comp.size)
          continue;
        used |= std::uint64_t{1} << v;
        placed[ci] = {v};
        if (pick_leaves(ci, comp.size, 0)) return true;
        used &= ~(std::uint64_t{1} << v);
      }
    }
    return false;
  }

  bool extend_path(std::size_t ci, int target_len) {
    if (static_cast<int>(placed[ci].size()) == target_len)
      return place_component(ci + 1);
    const int tail = placed[ci].back();
    std::uint64_t cand = g.neighbors(tail) & ~used;
    std::uint64_t tried_cls = 0;
    while (cand) {
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      if ((tried_cls >> cls[v]) & 1u) continue;
      tried_cls |= std::uint64_t{1} << cls[v];
      used |= std::uint64_t{1} << v;
      placed[ci].push_back(v);
      if (extend_path(ci, target_len)) return true;
      placed[ci].pop_back();
      used &= ~(std::uint64_t{1} << v);
    }
    return false;
  }

  bool pick_leaves(std::size_t ci, int remaining, int min_index) {
    if (remaining == 0) return place_component(ci + 1);
    const int center = placed[ci][0];
    std::uint64_t cand = g.neighbors(center) & ~used;
    cand &= ~((std::uint64_t{1} << min_index) - 1);  // leaves in increasing index
    std::uint64_t tried_cls = 0;
    while (cand) {
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      if ((tried_cls >> cls[v]) & 1u) continue;
      tried_cls |= std::uint64_t{1} << cls[v];
      used |= std::uint64_t{1} << v;
      placed[ci].push_back(v);
      if (pick_leaves(ci, remaining - 1, v + 1)) return true;
      placed[ci].pop_back();
      used &= ~(std::uint64_t{1} << v);
    }
    return false;
  }
};

// degree-multiset necessary condition: i-th largest host degree must meet
// the i-th largest degree demanded by the forest
inline bool degree_precheck(const SmallGraph& g, const ForestSpec& spec) {
  std::vector<int> need;
  for (const auto& c : spec.components()) {
    if (c.kind == TreeKind::Path) {
      for (int j = 0; j < c.size; ++j) need.push_back(j == 0 || j == c.size - 1 ? 1 : 2);
    } else {
      need.push_back(c.size);
      for (int j = 0; j < c.size; ++j) need.push_back(1);
    }
  }
  std::sort(need.rbegin(), need.rend());
  std::vector<int> have;
  for (int v = 0; v < g.order(); ++v) have.push_back(g.degree(v));
  if (have.size() < need.size()) return false;
  std::sort(have.rbegin(), have.rend());
  for (std::size_t i = 0; i < need.size(); ++i)
    if (have[i] < need[i]) return false;
  return true;
}

}  // namespace detail

inline std::optional<Embedding> find_embedding(const SmallGraph& g, const ForestSpec& spec) {
  if (spec.total_vertices() > g.order()) return std::nullopt;
  if (spec.total_edges() > g.edge_count()) return std::nullopt;
  if (!detail::degree_precheck(g, spec)) return std::nullopt;
  detail::EmbedSearch search(g, spec);
  if (!search.place_component(0)) return std::nullopt;
  Embedding emb;
  emb.assignments.resize(spec.components().size());
  for (std::size_t i = 0; i < search.comps.size(); ++i)
    emb.assignments[search.spec_index[i]] = search.placed[i];
  return emb;
}

// Reference checker: plain exhaustive backtracking over injective maps of
// forest vertices, in spec order, with no symmetry reduction.
inline std::optional<Embedding> naive_find_embedding(const SmallGraph& g,
                                                     const ForestSpec& spec) {
  struct PatternVertex {
    int comp;
    std::vector<int> earlier_neighbors;  // indices into the flat pattern list
  };
  std::vector<PatternVertex> pattern;
  for (std::size_t ci = 0; ci < spec.components().size(); ++ci) {
    const auto& c = spec.components()[ci];
    const int base = static_cast<int>(pattern.size());
    for (int j = 0; j < c.vertex_count(); ++j) {
      PatternVertex pv;
      pv.comp = static_cast<int>(ci);
      if (j > 0) {
        if (c.kind == TreeKind::Path)
          pv.earlier_neighbors.push_back(base + j - 1);
        else
          pv.earlier_neighbors.push_back(base);
      }
      pattern.push_back(std::move(pv));
    }
  }
  if (static_cast<int>(pattern.size()) > g.order()) return std::nullopt;

  std::vector<int> image(pattern.size(), -1);
  std::uint64_t used = 0;
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == pattern.size()) return true;
    for (int v = 0; v < g.order(); ++v) {
      if ((used >> v) & 1u) continue;
      bool ok = true;
      for (int p : pattern[i].earlier_neighbors)
        if (!g.has_edge(image[p], v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      image[i] = v;
      used |= std::uint64_t{1} << v;
      if (self(self, i + 1)) return true;
      used &= ~(std::uint64_t{1} << v);
      image[i] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  Embedding emb;
  emb.assignments.resize(spec.components().size());
  std::size_t idx = 0;
  for (std::size_t ci = 0; ci < spec.components().size(); ++ci)
    for (int j = 0; j < spec.components()[ci].vertex_count(); ++j)
      emb.assignments[ci].push_back(image[idx++]);
  return emb;
}

}  // namespace turan
