#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "turan/errors.hpp"

namespace turan {

// Dense undirected simple graph on at most 62 vertices, adjacency kept as
// one 64-bit row bitset per vertex.
class SmallGraph {
 public:
  static constexpr int kMaxVertices = 62;

  SmallGraph() = default;
  explicit SmallGraph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) throw CapacityError("vertex count out of range [0,62]");
  }

  static SmallGraph empty(int n) { return SmallGraph(n); }
  static SmallGraph complete(int n) {
    SmallGraph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }

  int order() const { return n_; }

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  void add_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
  }
  void remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
  }

  std::uint64_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }

  int edge_count() const {
    int bits = 0;
    for (int v = 0; v < n_; ++v) bits += std::popcount(adj_[v]);
    return bits / 2;
  }

  std::uint64_t vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
  }

  // Image of this graph under vertex relabeling v -> perm[v].
  SmallGraph permuted(const std::vector<int>& perm) const {
    SmallGraph g(n_);
    for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
    return g;
  }

  // Subgraph induced on the vertices of `mask`, relabeled by increasing index.
  SmallGraph induced(std::uint64_t mask) const {
    std::vector<int> verts;
    for (int v = 0; v < n_; ++v)
      if ((mask >> v) & 1u) verts.push_back(v);
    SmallGraph g(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (has_edge(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
  }

  friend bool operator==(const SmallGraph& a, const SmallGraph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.adj_[v] != b.adj_[v]) return false;
    return true;
  }

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
      throw DomainError("invalid vertex pair");
  }

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

// t new vertices adjacent to everything (including each other), appended
// after the existing vertices of G.
inline SmallGraph add_universal_vertices(const SmallGraph& g, int t) {
  const int n = g.order();
  if (t < 0 || n + t > SmallGraph::kMaxVertices)
    throw CapacityError("add_universal_vertices: capacity exceeded");
  SmallGraph out(n + t);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (int w = n; w < n + t; ++w)
    for (int v = 0; v < n + t; ++v)
      if (v != w) out.add_edge(w, v);
  return out;
}

inline SmallGraph disjoint_union(const SmallGraph& g, const SmallGraph& h) {
  const int n = g.order() + h.order();
  if (n > SmallGraph::kMaxVertices) throw CapacityError("disjoint_union: capacity exceeded");
  SmallGraph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(u + g.order(), v + g.order());
  return out;
}

// graph6: header byte 63+n, then the upper triangle column-major
// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed into 6-bit groups, each +63.
inline std::string encode_graph6(const SmallGraph& g) {
  const int n = g.order();
  std::string out;
  out += static_cast<char>(63 + n);
  int acc = 0, bits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        bits = 0;
      }
    }
  if (bits > 0) out += static_cast<char>(63 + (acc << (6 - bits)));
  return out;
}

inline SmallGraph decode_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("graph6: empty input");
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n < 0 || n > SmallGraph::kMaxVertices)
    throw ParseError("graph6: unsupported size header");
  const int nbits = n * (n - 1) / 2;
  const int nbytes = (nbits + 5) / 6;
  if (static_cast<int>(text.size()) != 1 + nbytes)
    throw ParseError("graph6: wrong length for declared order");
  SmallGraph g(n);
  int idx = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++idx) {
      const int c = static_cast<unsigned char>(text[1 + idx / 6]) - 63;
      if (c < 0 || c > 63) throw ParseError("graph6: byte out of range");
      if ((c >> (5 - idx % 6)) & 1) g.add_edge(u, v);
    }
  // trailing pad bits must be zero
  for (int idx2 = nbits; idx2 < nbytes * 6; ++idx2) {
    const int c = static_cast<unsigned char>(text[1 + idx2 / 6]) - 63;
    if ((c >> (5 - idx2 % 6)) & 1) throw ParseError("graph6: nonzero padding");
  }
  return g;
}

inline std::string to_dot(const SmallGraph& g) {
  std::string out = "graph {\n";
  for (int v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (auto [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace turan
