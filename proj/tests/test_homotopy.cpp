#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "hamflow/homotopy.hpp"

using namespace hamflow;

namespace {

FinitePoset poset_of(int n, std::vector<std::pair<int, int>> lt) {
  FinitePoset p;
  p.n = n;
  p.leq.assign(n, std::vector<uint8_t>(n, 0));
  for (int i = 0; i < n; ++i) p.leq[i][i] = 1;
  for (auto [a, b] : lt) p.leq[a][b] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.leq[i][k])
        for (int j = 0; j < n; ++j)
          if (p.leq[k][j]) p.leq[i][j] = 1;
  return p;
}

FinitePoset random_poset(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> coin(0, 2);
  std::vector<std::pair<int, int>> lt;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) == 0) lt.push_back({i, j});
  return poset_of(n, lt);
}

// Core computed with the removal loop scanning from the top index down,
// to probe order independence of the result.
std::vector<int> core_reversed(const FinitePoset& p) {
  std::vector<int> alive(p.n);
  for (int i = 0; i < p.n; ++i) alive[i] = i;
  FinitePoset cur = p;
  for (;;) {
    int hit = -1;
    for (int i = cur.n - 1; i >= 0; --i)
      if (is_beat_point(cur, i)) {
        hit = i;
        break;
      }
    if (hit < 0) break;
    std::vector<int> keep;
    for (int i = 0; i < cur.n; ++i)
      if (i != hit) keep.push_back(i);
    cur = induced(cur, keep);
    alive.erase(alive.begin() + hit);
  }
  return alive;
}

}  // namespace

TEST_CASE("beat points and cores of small posets") {  // [DERIVED]
  // Chain 0 < 1 < 2: everything collapses.
  FinitePoset chain = poset_of(3, {{0, 1}, {1, 2}});
  CHECK(is_contractible(chain));
  CHECK(core(chain).size() == 1);

  // Diamond: 1's strict downset {0} has a maximum, so 1 is a down beat.
  FinitePoset diamond = poset_of(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(is_beat_point(diamond, 1));
  auto [down, up] = beat_points(diamond);
  CHECK(!down.empty());
  CHECK(is_contractible(diamond));

  // Pseudocircle 0,1 < 2,3: minimal finite model of S^1, no beats at all.
  FinitePoset circ = poset_of(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  auto [cdown, cup] = beat_points(circ);
  CHECK(cdown.empty());
  CHECK(cup.empty());
  CHECK(core(circ) == std::vector<int>{0, 1, 2, 3});
  CHECK(!is_contractible(circ));

  // Singleton and antichain.
  CHECK(is_contractible(poset_of(1, {})));
  CHECK(core(poset_of(3, {})).size() == 3);
}

TEST_CASE("induced subposet keeps relations") {
  FinitePoset p = poset_of(4, {{0, 1}, {1, 2}, {2, 3}});
  FinitePoset q = induced(p, {0, 2, 3});
  CHECK(q.n == 3);
  CHECK(q.le(0, 1));  // 0 < 2 survives
  CHECK(q.le(1, 2));
  CHECK(!q.le(1, 0));
}

TEST_CASE("core is independent of removal order") {
  // [DERIVED] Cores of a finite poset are unique up to isomorphism; for
  // these sizes we check the surviving cardinality and, when the core is
  // the whole poset, the exact point set.
  std::mt19937 rng(20260816);
  for (int trial = 0; trial < 200; ++trial) {
    FinitePoset p = random_poset(rng, 4 + trial % 7);
    std::vector<int> a = core(p);
    std::vector<int> b = core_reversed(p);
    std::sort(b.begin(), b.end());
    CHECK(a.size() == b.size());
    if (a.size() == static_cast<size_t>(p.n)) CHECK(a == b);
  }
}

TEST_CASE("order complexes of model posets") {  // [DERIVED]
  // 3-chain: a solid triangle.
  OrderComplex tri = order_complex(poset_of(3, {{0, 1}, {1, 2}}));
  REQUIRE(tri.simplices.size() == 3);
  CHECK(tri.simplices[0].size() == 3);
  CHECK(tri.simplices[1].size() == 3);
  CHECK(tri.simplices[2] == std::vector<std::vector<int>>{{0, 1, 2}});

  // Pseudocircle: a 4-cycle, no triangles.
  OrderComplex circ =
      order_complex(poset_of(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  REQUIRE(circ.simplices.size() == 2);
  CHECK(circ.simplices[0].size() == 4);
  std::set<std::vector<int>> edges(circ.simplices[1].begin(),
                                   circ.simplices[1].end());
  CHECK(edges == std::set<std::vector<int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});

  // Antichain: vertices only.
  CHECK(order_complex(poset_of(3, {})).simplices.size() == 1);
}
