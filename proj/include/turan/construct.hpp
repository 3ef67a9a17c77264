#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "turan/forest.hpp"
#include "turan/graph.hpp"

namespace turan {

enum class ConstructionFamily {
  LinearGF,
  P3Forest,
  StarFni,
  Order4G1,
  Order4G2,
  DisjointCliques,
  MatchingExtremal,
};

enum class RemainderKind { Empty, SingleEdge, Matching, NearRegular, TrianglesPlusKr };

// Everything needed to rebuild the labeled graph: family, echoed
// parameters, size of the universal set U, and the shape of the rest.
struct ConstructionDescriptor {
  ConstructionFamily family;
  int n = 0;
  int universal_count = 0;
  RemainderKind remainder_kind = RemainderKind::Empty;
  int remainder_degree = 0;  // r for NearRegular
  std::vector<int> parameters;
};

inline const char* family_name(ConstructionFamily f) {
  switch (f) {
    case ConstructionFamily::LinearGF: return "linear-gf";
    case ConstructionFamily::P3Forest: return "p3-forest";
    case ConstructionFamily::StarFni: return "star-fni";
    case ConstructionFamily::Order4G1: return "order4-g1";
    case ConstructionFamily::Order4G2: return "order4-g2";
    case ConstructionFamily::DisjointCliques: return "disjoint-cliques";
    case ConstructionFamily::MatchingExtremal: return "matching-extremal";
  }
  return "?";
}

inline const char* remainder_name(RemainderKind r) {
  switch (r) {
    case RemainderKind::Empty: return "empty";
    case RemainderKind::SingleEdge: return "single-edge";
    case RemainderKind::Matching: return "matching";
    case RemainderKind::NearRegular: return "near-regular";
    case RemainderKind::TrianglesPlusKr: return "triangles-plus-kr";
  }
  return "?";
}

struct Construction {
  SmallGraph graph;
  ConstructionDescriptor descriptor;
};

// Graph on m vertices with every degree r, except that when r and m are
// both odd exactly one vertex has degree r-1.  Built as a circulant
// (offsets 1..r/2), plus the antipodal matching when r is odd and m even,
// plus a maximum non-edge matching along the coprime-offset cycle when r
// and m are both odd.  Edge count is floor(r*m/2) in every case.
inline SmallGraph near_regular(int m, int r) {
  if (r < 0 || r >= m) throw DomainError("near_regular: need 0 <= r < m");
  SmallGraph g(m);
  for (int off = 1; off <= r / 2; ++off)
    for (int v = 0; v < m; ++v) g.add_edge(v, (v + off) % m);
  if (r % 2 == 1) {
    if (m % 2 == 0) {
      for (int v = 0; v < m / 2; ++v) g.add_edge(v, v + m / 2);
    } else {
      // offset (m-1)/2 is coprime to odd m, so this walk is a Hamiltonian
      // cycle through non-edges; pair consecutive vertices along it
      const int off = (m - 1) / 2;
      std::vector<int> walk(m);
      for (int j = 0; j < m; ++j) walk[j] = static_cast<int>((static_cast<long long>(j) * off) % m);
      for (int j = 0; j + 1 < m; j += 2) g.add_edge(walk[j], walk[j + 1]);
    }
  }
  return g;
}

// floor(n/q) copies of K_q plus one K_{n mod q}; P_{q+1}-free.
inline SmallGraph disjoint_cliques(int n, int q) {
  if (q < 1 || n < 1) throw DomainError("disjoint_cliques: need q >= 1, n >= 1");
  SmallGraph g(n);
  for (int base = 0; base + q <= n; base += q)
    for (int u = base; u < base + q; ++u)
      for (int v = u + 1; v < base + q; ++v) g.add_edge(u, v);
  const int rem_base = (n / q) * q;
  for (int u = rem_base; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// k-1 universal vertices over an independent set: no k independent edges.
inline SmallGraph matching_extremal(int k, int n) {
  if (k < 1 || n < 2 * k - 1) throw DomainError("matching_extremal: need n >= 2k-1");
  return add_universal_vertices(SmallGraph::empty(n - (k - 1)), k - 1);
}

namespace detail {

inline SmallGraph with_universal_first(const SmallGraph& rest, int t) {
  // universal vertices get the low labels so serialized outputs are stable
  SmallGraph g = add_universal_vertices(rest, t);
  const int n = g.order();
  std::vector<int> perm(n);
  for (int v = 0; v < n; ++v) perm[v] = (v + t) % n;
  return g.permuted(perm);
}

}  // namespace detail

// G_F(n) for a linear forest with some component not P3: U of size
// (sum floor(v_i/2)) - 1 universal vertices; the rest is one edge when
// every v_i is odd, otherwise independent.
inline Construction linear_extremal(const ForestSpec& spec, int n) {
  if (classify(spec) != ForestClass::LinearGeneral)
    throw DomainError("linear_extremal: spec is not a linear forest with a component != P3");
  int s = 0;
  bool all_odd = true;
  for (const auto& c : spec.components()) {
    // an S2 component is the path P3 under another name
    s += c.vertex_count() / 2;
    if (c.vertex_count() % 2 == 0) all_odd = false;
  }
  const int u = s - 1;
  if (n < u + (all_odd ? 2 : 1)) throw DomainError("linear_extremal: n too small");
  SmallGraph rest(n - u);
  if (all_odd) rest.add_edge(0, 1);
  Construction out{detail::with_universal_first(rest, u),
                   {ConstructionFamily::LinearGF, n, u,
                    all_odd ? RemainderKind::SingleEdge : RemainderKind::Empty, 0, {}}};
  return out;
}

// F(n,i): i-1 universal vertices over a near-(d_i - 1)-regular graph.
inline Construction star_extremal(const ForestSpec& spec, int n, int i) {
  const auto cls = classify(spec);
  if (cls != ForestClass::StarForest && cls != ForestClass::AllP3)
    throw DomainError("star_extremal: spec is not a star forest");
  const int k = spec.component_count();
  if (i < 1 || i > k) throw DomainError("star_extremal: index out of range");
  const int d = star_degrees(spec)[i - 1];
  const int m = n - i + 1;
  if (m < d + 1) throw DomainError("star_extremal: n too small for index i");
  Construction out{detail::with_universal_first(near_regular(m, d - 1), i - 1),
                   {cls == ForestClass::AllP3 ? ConstructionFamily::P3Forest
                                              : ConstructionFamily::StarFni,
                    n, i - 1,
                    d == 2 ? RemainderKind::Matching : RemainderKind::NearRegular, d - 1,
                    {i}}};
  return out;
}

enum class Order4Variant { G1, G2 };

// The two section-4 constructions for a*P4 + b*S3.
// G1: b universal vertices, rest K_r plus d triangles (n - b = 3d + r).
// G2: 2a + b - 1 universal vertices, rest empty.
inline Construction order4_extremal(int a, int b, int n, Order4Variant variant) {
  if (a < 1 || b < 0) throw DomainError("order4_extremal: need a >= 1, b >= 0");
  if (n < 4 * (a + b)) throw DomainError("order4_extremal: need n >= 4(a+b)");
  if (variant == Order4Variant::G1) {
    const int m = n - b;
    const int r = m % 3;
    SmallGraph rest(m);
    for (int base = r; base + 3 <= m; base += 3) {
      rest.add_edge(base, base + 1);
      rest.add_edge(base, base + 2);
      rest.add_edge(base + 1, base + 2);
    }
    if (r == 2) rest.add_edge(0, 1);
    return {detail::with_universal_first(rest, b),
            {ConstructionFamily::Order4G1, n, b, RemainderKind::TrianglesPlusKr, 0, {a, b}}};
  }
  const int u = 2 * a + b - 1;
  if (u >= n) throw DomainError("order4_extremal: n too small for G2");
  return {detail::with_universal_first(SmallGraph::empty(n - u), u),
          {ConstructionFamily::Order4G2, n, u, RemainderKind::Empty, 0, {a, b}}};
}

}  // namespace turan
