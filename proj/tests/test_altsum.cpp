#include <catch2/catch_amalgamated.hpp>

#include "howelab/altsum.hpp"

#include <random>

using namespace howelab;

namespace {
OrderedSymbol os(std::vector<int> top, std::vector<int> bottom) {
  return OrderedSymbol(std::move(top), std::move(bottom));
}

OrderedSymbol random_theta(std::mt19937& rng, int max_rank) {
  static const std::vector<int> defects = {-3, -2, -1, 0, 1, 2, 3};
  while (true) {
    int d = defects[rng() % defects.size()];
    int boxes = static_cast<int>(rng() % (max_rank + 1));
    auto rand_diagram = [&](int target) {
      Diagram g;
      while (target > 0) {
        int row = 1 + static_cast<int>(rng() % target);
        if (!g.empty()) row = std::min(row, g.back());
        g.push_back(row);
        target -= row;
      }
      return g;
    };
    int t = static_cast<int>(rng() % (boxes + 1));
    try {
      return ordered_from_diagrams(d, rand_diagram(t), rand_diagram(boxes - t));
    } catch (const std::exception&) {
      continue;
    }
  }
}
}  // namespace

TEST_CASE("altsum terms") {
  // theta = {1|}, N'=2, k=1: two terms
  auto terms = altsum_terms(os({1}, {}), 2, 1);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].sign == -1);
  CHECK(terms[0].step == 0);
  CHECK(terms[0].sym == os({2}, {}));
  CHECK(terms[1].sign == 1);
  CHECK(terms[1].step == 1);
  CHECK(terms[1].sym == os({1}, {}));
  // k = 0 leaves only the theta term
  auto t0 = altsum_terms(os({0, 2}, {1}), 5, 0);
  REQUIRE(t0.size() == 1);
  CHECK(t0[0].sign == 1);
  CHECK(t0[0].sym == os({0, 2}, {1}));
  // Steinberg top row, N' = m+1, k = 1: two terms
  for (int m = 1; m <= 4; ++m) {
    std::vector<int> top, bottom;
    for (int i = 1; i <= m; ++i) top.push_back(i);
    for (int i = 0; i <= m; ++i) bottom.push_back(i);
    auto st = altsum_terms(os(top, bottom), m + 1, 1);
    CHECK(st.size() == 2);
  }
  CHECK_THROWS_AS(altsum_terms(os({1}, {}), 1, 1), BadRange);
}

TEST_CASE("altsum resolve") {
  // A_1({1|}, N'=2) = { {1<2|0}, {0<2|1} } with {2|} cancelled
  auto r = altsum_resolve(os({1}, {}), 2, 1);
  std::set<OrderedSymbol> got(r.begin(), r.end());
  std::set<OrderedSymbol> expect = {os({1, 2}, {0}), os({0, 2}, {1})};
  CHECK(got == expect);
  // A_0 is the identity
  auto r0 = altsum_resolve(os({0, 2}, {1}), 3, 0);
  REQUIRE(r0.size() == 1);
  CHECK(r0[0] == os({0, 2}, {1}));
  // the Steinberg alternating sum A_1(St_m, m+1) drops the top-grown symbol
  for (int m = 1; m <= 5; ++m) {
    std::vector<int> top, bottom;
    for (int i = 0; i <= m; ++i) top.push_back(i);
    for (int i = 1; i <= m; ++i) bottom.push_back(i);
    // designated row = the top row of the displayed symbol
    auto rs = altsum_resolve(os(top, bottom), m + 1, 1);
    std::set<OrderedSymbol> got_m(rs.begin(), rs.end());
    std::vector<int> b2 = bottom;
    b2[m - 1] = m + 1;
    std::vector<int> st_top, st_bottom;
    for (int i = 0; i <= m + 1; ++i) st_top.push_back(i);
    for (int i = 1; i <= m + 1; ++i) st_bottom.push_back(i);
    std::set<OrderedSymbol> expect_m = {os(top, b2), os(st_top, st_bottom)};
    CHECK(got_m == expect_m);
  }
}

TEST_CASE("altsum verify") {
  CHECK(altsum_verify(os({1}, {}), 2, 1));
  CHECK(altsum_verify(os({0, 2}, {1}), 3, 0));
  for (int m = 1; m <= 3; ++m) {
    std::vector<int> top, bottom;
    for (int i = 0; i <= m; ++i) top.push_back(i);
    for (int i = 1; i <= m; ++i) bottom.push_back(i);
    CHECK(altsum_verify(os(top, bottom), m + 1, 1));
  }
}

TEST_CASE("altsum randomized verification") {
  // within the range hypothesis of the resolution theorem: k < N' (the
  // construction always has k <= m < N'), with k <= N' allowed when the
  // designated row is empty
  std::mt19937 rng(20240817);
  int done = 0;
  while (done < 500) {
    OrderedSymbol theta = random_theta(rng, 8);
    int k = static_cast<int>(rng() % 4);
    int maxtop = theta.top.empty() ? 0 : theta.top.back();
    int nprime = std::max(maxtop + 1, k + 1) + static_cast<int>(rng() % 3);
    CHECK(altsum_verify(theta, nprime, k));
    ++done;
  }
}

TEST_CASE("altsum monotone in N'") {
  std::mt19937 rng(99);
  for (int i = 0; i < 80; ++i) {
    OrderedSymbol theta = random_theta(rng, 6);
    int maxtop = theta.top.empty() ? 0 : theta.top.back();
    int k = static_cast<int>(rng() % 3);
    auto small = altsum_resolve(theta, std::max(maxtop, k) + 1, k);
    auto large = altsum_resolve(theta, std::max(maxtop, k) + 3, k);
    std::set<OrderedSymbol> ls(large.begin(), large.end());
    for (const OrderedSymbol& s : small) CHECK(ls.count(s) == 1);
    // and the resolved set is a subset of the Pieri induction
    std::set<OrderedSymbol> all;
    for (const OrderedSymbol& s : pieri_induct_ordered(theta, k)) all.insert(s);
    for (const OrderedSymbol& s : large) CHECK(all.count(s) == 1);
  }
}
