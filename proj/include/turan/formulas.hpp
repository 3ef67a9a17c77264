#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "turan/construct.hpp"
#include "turan/embedding.hpp"
#include "turan/forest.hpp"

namespace turan {

enum class TheoremTag { EGPath, EGMatching, LinearForests, StarForests, SameOrder, Order4Mixed };

inline const char* theorem_name(TheoremTag t) {
  switch (t) {
    case TheoremTag::EGPath: return "EG-path";
    case TheoremTag::EGMatching: return "EG-matching";
    case TheoremTag::LinearForests: return "linear-forests";
    case TheoremTag::StarForests: return "star-forests";
    case TheoremTag::SameOrder: return "same-order";
    case TheoremTag::Order4Mixed: return "order4-mixed";
  }
  return "?";
}

struct TuranEvaluation {
  long long value = 0;
  TheoremTag theorem = TheoremTag::LinearForests;
  std::optional<int> argmax_i;            // smallest maximizing index (stars)
  std::vector<int> maximizing_indices;    // every maximizing index
  int c = 0;                              // parity constant of Thm 1.2
  std::vector<long long> f_doubled;       // 2*f_i = 2(i-1) + (d_i - 1)
  bool asymptotic_caveat = false;         // value proven only for large n
  std::vector<Order4Variant> attained;    // order-4 case: which of G1/G2 hit the max
  std::string uniqueness;                 // order-4 case: Thm 4.1 verdict
};

namespace detail {
inline long long choose2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }
}  // namespace detail

// Erdos-Gallai: ex(n, P_k) <= floor((k-2) n / 2).
inline long long eg_path_bound(int k, int n) {
  if (k < 2 || n < 1) throw DomainError("eg_path_bound: need k >= 2, n >= 1");
  return static_cast<long long>(k - 2) * n / 2;
}

// ex(n, k independent edges) = max{C(k-1,2) + (k-1)(n-k+1), C(2k-1,2)}.
// The second branch is the edge count of K_{2k-1}, which has no k
// independent edges yet beats the first branch for small n.
inline long long eg_matching_number(int k, int n) {
  if (k < 1) throw DomainError("eg_matching_number: need k >= 1");
  if (n < 2 * k - 1) throw DomainError("eg_matching_number: out of regime, need n >= 2k-1");
  const long long a = detail::choose2(k - 1) + static_cast<long long>(k - 1) * (n - k + 1);
  const long long b = detail::choose2(2 * k - 1);
  return a > b ? a : b;
}

// Linear forests with some component != P3.
inline TuranEvaluation linear_forest_number(const ForestSpec& spec, int n) {
  const auto cls = classify(spec);
  if (cls == ForestClass::AllP3)
    throw DomainError("linear_forest_number: every component is P3; use star_forest_number");
  if (cls != ForestClass::LinearGeneral)
    throw DomainError("linear_forest_number: spec is not a linear forest");
  long long s = 0;
  bool all_odd = true;
  for (const auto& comp : spec.components()) {
    // an S2 component is the path P3 under another name
    s += comp.vertex_count() / 2;
    if (comp.vertex_count() % 2 == 0) all_odd = false;
  }
  if (n < s) throw DomainError("linear_forest_number: need n >= sum of floor(v_i/2)");
  TuranEvaluation ev;
  ev.theorem = TheoremTag::LinearForests;
  ev.c = all_odd ? 1 : 0;
  ev.value = (s - 1) * (n - s + 1) + detail::choose2(s - 1) + ev.c;
  ev.asymptotic_caveat = true;
  return ev;
}

// Star forests (P3 admitted as S2).
inline TuranEvaluation star_forest_number(const ForestSpec& spec, int n) {
  const auto cls = classify(spec);
  if (cls != ForestClass::StarForest && cls != ForestClass::AllP3)
    throw DomainError("star_forest_number: spec is not a star forest");
  if (n < spec.total_vertices())
    throw DomainError("star_forest_number: need n >= total vertex count of F");
  const auto degrees = star_degrees(spec);
  const int k = spec.component_count();
  TuranEvaluation ev;
  ev.theorem = TheoremTag::StarForests;
  ev.asymptotic_caveat = true;
  for (int i = 1; i <= k; ++i) {
    const long long d = degrees[i - 1];
    const long long m = n - i + 1;
    const long long term =
        static_cast<long long>(i - 1) * m + detail::choose2(i - 1) + (d - 1) * m / 2;
    ev.f_doubled.push_back(2 * (i - 1) + (d - 1));
    if (ev.maximizing_indices.empty() || term > ev.value) {
      ev.value = term;
      ev.maximizing_indices = {i};
    } else if (term == ev.value) {
      ev.maximizing_indices.push_back(i);
    }
  }
  ev.argmax_i = ev.maximizing_indices.front();
  return ev;
}

// Bushaw-Kettle: k disjoint paths of equal order l.
inline TuranEvaluation same_order_number(int k, int l, int n) {
  if (k < 1) throw DomainError("same_order_number: need k >= 1");
  if (l <= 2)
    throw DomainError("same_order_number: need l >= 3 (l = 2 is the matching formula)");
  if (n < static_cast<long long>(k) * l)
    throw DomainError("same_order_number: need n >= k*l");
  TuranEvaluation ev;
  ev.theorem = TheoremTag::SameOrder;
  ev.asymptotic_caveat = true;
  if (l == 3) {
    ev.value = detail::choose2(k - 1) + static_cast<long long>(n - k + 1) * (k - 1) +
               (n - k + 1) / 2;
  } else {
    const long long s = static_cast<long long>(k) * (l / 2);
    ev.c = l % 2;
    ev.value = detail::choose2(s - 1) + (s - 1) * (n - s + 1) + ev.c;
  }
  return ev;
}

// F = a*P4 + b*S3, value computed from the two competing constructions.
// b = 0 redirects to Thm 2.1 and a = 0 to Thm 1.3.
inline TuranEvaluation order4_number(int a, int b, int n) {
  if (a < 0 || b < 0 || a + b < 1) throw DomainError("order4_number: need a + b >= 1");
  if (a == 0) {
    std::vector<TreeComponent> comps(static_cast<std::size_t>(b), TreeComponent{TreeKind::Star, 3});
    return star_forest_number(ForestSpec(std::move(comps)), n);
  }
  if (b == 0) return same_order_number(a, 4, n);
  if (n < 4 * (a + b)) throw DomainError("order4_number: need n >= 4(a+b)");
  const long long e1 = order4_extremal(a, b, n, Order4Variant::G1).graph.edge_count();
  const long long e2 = order4_extremal(a, b, n, Order4Variant::G2).graph.edge_count();
  TuranEvaluation ev;
  ev.theorem = TheoremTag::Order4Mixed;
  ev.asymptotic_caveat = true;
  ev.value = e1 > e2 ? e1 : e2;
  if (e1 >= ev.value) ev.attained.push_back(Order4Variant::G1);
  if (e2 >= ev.value) ev.attained.push_back(Order4Variant::G2);
  const int r = (n - b) % 3;
  if (a == 1 && r == 0)
    ev.uniqueness = "G1 unique";
  else if (a == 1)
    ev.uniqueness = "G1 and G2 are the only extremal graphs";
  else
    ev.uniqueness = "G2 unique";
  return ev;
}

// Dispatcher over classify.
inline TuranEvaluation turan_formula(const ForestSpec& spec, int n) {
  switch (classify(spec)) {
    case ForestClass::LinearGeneral:
      return linear_forest_number(spec, n);
    case ForestClass::AllP3:
    case ForestClass::StarForest:
      return star_forest_number(spec, n);
    case ForestClass::Order4Mixed: {
      int a = 0, b = 0;
      for (const auto& c : spec.components()) (c.kind == TreeKind::Path ? a : b) += 1;
      return order4_number(a, b, n);
    }
    case ForestClass::Unsupported:
      break;
  }
  throw UnsupportedError(
      "no theorem covers this forest (mixed paths and stars other than a*P4 + b*S3)");
}

// The known extremal construction for whatever class the spec falls in.
inline Construction extremal_construction(const ForestSpec& spec, int n) {
  switch (classify(spec)) {
    case ForestClass::LinearGeneral:
      return linear_extremal(spec, n);
    case ForestClass::AllP3:
    case ForestClass::StarForest: {
      const auto ev = star_forest_number(spec, n);
      return star_extremal(spec, n, *ev.argmax_i);
    }
    case ForestClass::Order4Mixed: {
      int a = 0, b = 0;
      for (const auto& c : spec.components()) (c.kind == TreeKind::Path ? a : b) += 1;
      const auto g1 = order4_extremal(a, b, n, Order4Variant::G1);
      const auto g2 = order4_extremal(a, b, n, Order4Variant::G2);
      return g2.graph.edge_count() > g1.graph.edge_count() ? g2 : g1;
    }
    case ForestClass::Unsupported:
      break;
  }
  throw UnsupportedError("no extremal construction for this forest class");
}

struct ConjectureReport {
  ForestSpec forest;
  long long e_f = 0;       // edge count of F
  int k = 0;               // component count of F
  int witness_n = 0;
  SmallGraph witness;
  long long avg_degree_num = 0;  // reduced fraction 2*e / n
  long long avg_degree_den = 1;
};

// Scan for a counterexample to the Goldberg--Magdon-Ismail conjecture:
// an F-free graph on >= e(F) + k vertices with average degree > e(F) - 1.
// Candidates are the known extremal constructions themselves.
inline std::optional<ConjectureReport> goldberg_counterexample(const ForestSpec& spec,
                                                               int n_max) {
  const long long e_f = spec.total_edges();
  const int k = spec.component_count();
  const int n_hi = n_max < SmallGraph::kMaxVertices ? n_max : SmallGraph::kMaxVertices;
  for (int n = static_cast<int>(e_f) + k; n <= n_hi; ++n) {
    Construction cons = [&] {
      try {
        return extremal_construction(spec, n);
      } catch (const DomainError&) {
        return Construction{SmallGraph::empty(0), {}};
      }
    }();
    if (cons.graph.order() != n) continue;
    const long long e = cons.graph.edge_count();
    if (2 * e <= static_cast<long long>(n) * (e_f - 1)) continue;  // avg degree too low
    if (find_embedding(cons.graph, spec))
      throw Error("goldberg_counterexample: construction unexpectedly contains F");
    ConjectureReport rep{spec, e_f, k, n, cons.graph, 2 * e, n};
    const long long g = std::gcd(rep.avg_degree_num, rep.avg_degree_den);
    rep.avg_degree_num /= g;
    rep.avg_degree_den /= g;
    return rep;
  }
  return std::nullopt;
}

}  // namespace turan
