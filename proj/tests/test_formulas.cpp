#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "turan/formulas.hpp"
#include "turan/forest.hpp"

using namespace turan;

TEST_CASE("Erdos-Gallai path bound") {
  CHECK(eg_path_bound(4, 6) == 6);  // attained by 2*K3
  CHECK(eg_path_bound(2, 10) == 0);
  CHECK(eg_path_bound(5, 7) == 10);
  CHECK_THROWS_AS(eg_path_bound(1, 5), DomainError);
}

TEST_CASE("Erdos-Gallai matching number") {
  CHECK(eg_matching_number(2, 4) == 3);
  CHECK(eg_matching_number(3, 10) == 17);
  CHECK(eg_matching_number(1, 5) == 0);
  // the K_{2k-1} branch wins at small n: ex(5, 3 independent edges) = C(5,2)
  CHECK(eg_matching_number(3, 5) == 10);
  CHECK_THROWS_AS(eg_matching_number(3, 4), DomainError);
}

TEST_CASE("linear forest formula") {
  CHECK(linear_forest_number(parse_forest("P4+P2"), 10).value == 17);
  CHECK(linear_forest_number(parse_forest("P4+P2"), 10).c == 0);
  CHECK(linear_forest_number(parse_forest("P5+P3"), 12).value == 22);
  CHECK(linear_forest_number(parse_forest("P5+P3"), 12).c == 1);
  CHECK(linear_forest_number(parse_forest("2*P4"), 10).value == 24);
  CHECK(linear_forest_number(parse_forest("P4+P2"), 10).asymptotic_caveat);
  CHECK_THROWS_AS(linear_forest_number(parse_forest("2*P3"), 10), DomainError);
  CHECK_THROWS_AS(linear_forest_number(parse_forest("S3+S2"), 10), DomainError);
}

TEST_CASE("star forest formula") {
  auto ev = star_forest_number(parse_forest("S3+S2"), 10);
  CHECK(ev.value == 13);
  CHECK(*ev.argmax_i == 2);
  CHECK(ev.f_doubled == std::vector<long long>{2, 3});
  CHECK(star_forest_number(parse_forest("2*S2"), 9).value == 12);
  // single star, even n: floor((d-1) n / 2)
  CHECK(star_forest_number(parse_forest("S4"), 10).value == 15);
  CHECK(star_forest_number(parse_forest("S5"), 12).value == 24);
  CHECK_THROWS_AS(star_forest_number(parse_forest("P4+P2"), 10), DomainError);
}

TEST_CASE("same-order formula") {
  CHECK(same_order_number(2, 4, 10).value == 24);
  CHECK(same_order_number(2, 3, 9).value == 12);
  // k=1, l=5: the expression evaluates to 10; the oracle records ex(10,P5)=13,
  // so the Bushaw-Kettle form is not the Turan number for a single path
  CHECK(same_order_number(1, 5, 10).value == 10);
  CHECK(same_order_number(3, 5, 20).value == 86);  // C(5,2) + 5*15 + 1
  CHECK_THROWS_AS(same_order_number(2, 2, 10), DomainError);
  CHECK_THROWS_AS(same_order_number(2, 4, 7), DomainError);
}

TEST_CASE("order-4 formula and routing") {
  auto ev = order4_number(1, 1, 10);
  CHECK(ev.value == 18);
  CHECK(ev.attained == std::vector<Order4Variant>{Order4Variant::G1});
  CHECK(ev.uniqueness == "G1 unique");

  CHECK(order4_number(2, 0, 10).value == 24);
  CHECK(order4_number(2, 0, 10).theorem == TheoremTag::SameOrder);
  CHECK(order4_number(0, 2, 10).theorem == TheoremTag::StarForests);

  auto big = order4_number(2, 1, 20);
  CHECK(big.value == 70);
  CHECK(big.attained == std::vector<Order4Variant>{Order4Variant::G2});
  CHECK(big.uniqueness == "G2 unique");
}

TEST_CASE("dispatcher routes by class") {
  CHECK(turan_formula(parse_forest("P4+P2"), 10).theorem == TheoremTag::LinearForests);
  CHECK(turan_formula(parse_forest("P4+P2"), 10).value == 17);
  CHECK(turan_formula(parse_forest("2*P3"), 9).theorem == TheoremTag::StarForests);
  CHECK(turan_formula(parse_forest("2*P3"), 9).value == 12);
  CHECK(turan_formula(parse_forest("P4+S3"), 10).value == 18);
  CHECK_THROWS_AS(turan_formula(parse_forest("P5+S3"), 20), UnsupportedError);
}

TEST_CASE("all-P3 specs route identically to all-S2") {
  for (int k = 1; k <= 5; ++k) {
    std::string p3s = std::to_string(k) + "*P3";
    std::string s2s = std::to_string(k) + "*S2";
    for (int n = 3 * k; n <= 40; ++n)
      CHECK(turan_formula(parse_forest(p3s), n).value ==
            turan_formula(parse_forest(s2s), n).value);
  }
}

TEST_CASE("cross-formula agreement with the same-order formula") {
  for (int l = 4; l <= 7; ++l)
    for (int k = 1; k <= 4; ++k) {
      std::string spec = std::to_string(k) + "*P" + std::to_string(l);
      auto f = parse_forest(spec);
      for (int n = k * l; n <= 60; ++n)
        CHECK(linear_forest_number(f, n).value == same_order_number(k, l, n).value);
    }
  for (int k = 2; k <= 5; ++k) {
    auto f = parse_forest(std::to_string(k) + "*S2");
    for (int n = 3 * k; n <= 60; ++n)
      CHECK(star_forest_number(f, n).value == same_order_number(k, 3, n).value);
  }
}

TEST_CASE("below the argmax the leading coefficients increase") {
  // quantified over all star forests with k <= 5 components, degrees <= 8
  std::vector<std::vector<int>> stacks;
  std::vector<int> cur;
  auto gen = [&](auto&& self, int max_d, int left) -> void {
    if (!cur.empty()) stacks.push_back(cur);
    if (left == 0) return;
    for (int d = max_d; d >= 1; --d) {
      cur.push_back(d);
      self(self, d, left - 1);
      cur.pop_back();
    }
  };
  gen(gen, 8, 5);
  int quantified = 0;
  for (const auto& ds : stacks) {
    std::vector<TreeComponent> comps;
    for (int d : ds) comps.push_back({TreeKind::Star, d});
    ForestSpec f(std::move(comps));
    if (classify(f) == ForestClass::LinearGeneral) continue;  // all-S1 collapses to paths
    for (int n : {f.total_vertices(), 20, 45}) {
      if (n < f.total_vertices()) continue;
      auto ev = star_forest_number(f, n);
      const int i = *ev.argmax_i;
      for (int j = 1; j < i; ++j) {
        CHECK(ev.f_doubled[j - 1] < ev.f_doubled[i - 1]);
        ++quantified;
      }
    }
  }
  CHECK(quantified > 100);
}

TEST_CASE("each max term is i-1 universal vertices plus a single-star value") {
  for (const char* s : {"S3+S2", "2*S3", "3*S2", "S5+S4+S2", "2*S4+2*S2"}) {
    auto f = parse_forest(s);
    const int k = f.component_count();
    for (int n = f.total_vertices() + k; n <= 50; n += 7)
      for (int i = 1; i <= k; ++i) {
        const long long m = n - i + 1;
        const long long d = f.components()[i - 1].size;
        const long long term = (i - 1) * m + (i - 1) * (i - 2) / 2 + (d - 1) * m / 2;
        std::vector<TreeComponent> single{{TreeKind::Star, static_cast<int>(d)}};
        const long long star_only =
            star_forest_number(ForestSpec(single), static_cast<int>(m)).value;
        CHECK(term == (i - 1) * m + (i - 1) * (i - 2) / 2 + star_only);
      }
  }
}

TEST_CASE("monotone in n") {
  for (const char* s : {"P4+P2", "P5+P3", "2*P4", "P5+P4+P2", "S3+S2", "2*S3", "3*S2",
                        "P4+S3", "2*P4+S3"}) {
    auto f = parse_forest(s);
    for (int n = f.total_vertices(); n < 60; ++n)
      CHECK(turan_formula(f, n + 1).value >= turan_formula(f, n).value);
  }
}

TEST_CASE("goldberg counterexample scan") {
  auto rep = goldberg_counterexample(parse_forest("2*P4"), 20);
  REQUIRE(rep);
  CHECK(rep->witness_n == 13);
  CHECK(rep->witness.edge_count() == 33);
  CHECK(rep->avg_degree_num == 66);
  CHECK(rep->avg_degree_den == 13);
  CHECK(rep->e_f == 6);
  CHECK(!find_embedding(rep->witness, rep->forest));

  // two components of even order, degenerate small case: K_{1,3} already
  // violates the conjecture for 2*P2 (avg degree 3/2 > e(F)-1 = 1)
  auto matching = goldberg_counterexample(parse_forest("2*P2"), 20);
  REQUIRE(matching);
  CHECK(matching->witness_n == 4);

  // no two even components: scan finds nothing
  CHECK(!goldberg_counterexample(parse_forest("P5+P3"), 20));
}
