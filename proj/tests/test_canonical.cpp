#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "turan/canonical.hpp"
#include "turan/graph.hpp"

using namespace turan;

namespace {

SmallGraph random_graph(std::mt19937& rng, int n, double p) {
  SmallGraph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Independent oracle: isomorphism by explicit search over all n!
// permutations, no reliance on canonical_form.
bool isomorphic_brute(const SmallGraph& a, const SmallGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (a.permuted(perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Count isomorphism classes of all labeled graphs on n vertices by
// brute-force grouping.
int count_classes_brute(int n) {
  std::vector<SmallGraph> reps;
  const int slots = n * (n - 1) / 2;
  for (long mask = 0; mask < (1L << slots); ++mask) {
    SmallGraph g(n);
    int bit = 0;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u, ++bit)
        if ((mask >> bit) & 1) g.add_edge(u, v);
    bool fresh = true;
    for (const auto& r : reps)
      if (isomorphic_brute(g, r)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(g);
  }
  return static_cast<int>(reps.size());
}

SmallGraph path_graph(int n) {
  SmallGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

}  // namespace

TEST_CASE("relabeled paths share a label, different graphs do not") {
  SmallGraph p(3);
  p.add_edge(0, 1);
  p.add_edge(1, 2);
  SmallGraph q(3);  // same path centered at vertex 0
  q.add_edge(1, 0);
  q.add_edge(0, 2);
  CHECK(canonical_form(p) == canonical_form(q));
  CHECK(canonical_form(p) != canonical_form(SmallGraph::complete(3)));
}

TEST_CASE("label counts on small orders match brute-force grouping") {
  // expected counts computed by isomorphic_brute grouping below
  const int expected[] = {1, 2, 4, 11, 34};
  for (int n = 1; n <= 5; ++n) {
    CHECK(count_classes_brute(n) == expected[n - 1]);
    std::set<CanonicalLabel> labels;
    const int slots = n * (n - 1) / 2;
    for (long mask = 0; mask < (1L << slots); ++mask) {
      SmallGraph g(n);
      int bit = 0;
      for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
          if ((mask >> bit) & 1) g.add_edge(u, v);
      labels.insert(canonical_form(g));
    }
    CHECK(static_cast<int>(labels.size()) == expected[n - 1]);
  }
}

TEST_CASE("all 11 classes on 4 vertices get distinct labels") {
  std::set<CanonicalLabel> labels;
  for (long mask = 0; mask < 64; ++mask) {
    SmallGraph g(4);
    int bit = 0;
    for (int v = 1; v < 4; ++v)
      for (int u = 0; u < v; ++u, ++bit)
        if ((mask >> bit) & 1) g.add_edge(u, v);
    labels.insert(canonical_form(g));
  }
  CHECK(labels.size() == 11);
}

TEST_CASE("invariance under random relabeling") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);  // up to 10, covers both code paths
    auto g = random_graph(rng, n, 0.2 + 0.1 * (trial % 7));
    const auto label = canonical_form(g);
    for (int rep = 0; rep < 100; ++rep)
      CHECK(canonical_form(g.permuted(random_permutation(rng, n))) == label);
  }
}

TEST_CASE("distinct labels imply non-isomorphic (spot check against brute force)") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);  // brute force needs small n
    auto a = random_graph(rng, n, 0.5);
    auto b = random_graph(rng, n, 0.5);
    CHECK((canonical_form(a) == canonical_form(b)) == isomorphic_brute(a, b));
  }
}

TEST_CASE("symmetric graphs that stress the refinement search") {
  // one universal vertex over a perfect matching (near-regular shape)
  SmallGraph m(11);
  for (int v = 1; v + 1 < 11; v += 2) m.add_edge(v, v + 1);
  auto g = add_universal_vertices(m, 1);
  std::mt19937 rng(5);
  const auto label = canonical_form(g);
  for (int rep = 0; rep < 20; ++rep)
    CHECK(canonical_form(g.permuted(random_permutation(rng, g.order()))) == label);

  CHECK(canonical_form(SmallGraph::empty(12)) ==
        canonical_form(SmallGraph::empty(12).permuted(random_permutation(rng, 12))));
  CHECK(canonical_form(SmallGraph::complete(12)) != canonical_form(SmallGraph::empty(12)));

  // two disjoint cycles vs one long cycle, same degree sequence
  SmallGraph two_c5(10), c10(10);
  for (int v = 0; v < 5; ++v) {
    two_c5.add_edge(v, (v + 1) % 5);
    two_c5.add_edge(5 + v, 5 + (v + 1) % 5);
  }
  for (int v = 0; v < 10; ++v) c10.add_edge(v, (v + 1) % 10);
  CHECK(canonical_form(two_c5) != canonical_form(c10));
  CHECK(canonical_form(c10) ==
        canonical_form(c10.permuted(random_permutation(rng, 10))));
}

TEST_CASE("path relabelings across the brute-force/refinement boundary") {
  std::mt19937 rng(31337);
  for (int n : {7, 8, 9}) {
    auto g = path_graph(n);
    const auto label = canonical_form(g);
    for (int rep = 0; rep < 50; ++rep)
      CHECK(canonical_form(g.permuted(random_permutation(rng, n))) == label);
  }
}
