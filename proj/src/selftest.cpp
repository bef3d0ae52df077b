#include <numeric>
#include <random>
#include <sstream>

#include "hamflow/canonical.hpp"
#include "hamflow/homology.hpp"
#include "hamflow/homotopy.hpp"
#include "hamflow/io.hpp"
#include "hamflow/moves.hpp"

// Internal consistency battery.  Each check appends "<name>: <detail>" on
// failure; random inputs are drawn from the caller's seed but every property
// must hold for all of them, so verdicts are seed-independent.

namespace hamflow {

namespace {

void expect(std::vector<std::string>& fails, const char* name, bool ok,
            const std::string& detail) {
  if (!ok) fails.push_back(std::string(name) + ": " + detail);
}

FinitePoset poset_of(int n, const std::vector<std::pair<int, int>>& lt) {
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

FinitePoset random_poset(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coin(0, 2);
  std::vector<std::pair<int, int>> lt;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) == 0) lt.push_back({i, j});
  return poset_of(n, lt);
}

Diagram shuffled(const Diagram& d, std::mt19937_64& rng) {
  std::vector<int32_t> dp(d.dart_count()), vp(d.vertex_count());
  std::iota(dp.begin(), dp.end(), 0);
  std::iota(vp.begin(), vp.end(), 0);
  std::shuffle(dp.begin(), dp.end(), rng);
  std::shuffle(vp.begin(), vp.end(), rng);
  return relabeled(d, dp, vp);
}

}  // namespace

std::vector<std::string> selftest(uint64_t seed, int fault) {
  std::vector<std::string> fails;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);

  // Pseudocircle: the four-point model of S^1 has no beat points and the
  // homology of a circle.
  {
    FinitePoset p = poset_of(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto [down, up] = beat_points(p);
    expect(fails, "pseudocircle", down.empty() && up.empty(),
           "unexpected beat point");
    expect(fails, "pseudocircle", !is_contractible(p), "collapsed to a point");
    HomologyResult h = homology(order_complex(p), Coefficients::Z);
    expect(fails, "pseudocircle", sphere_report(h, 1),
           "order complex is not a homology circle");
  }

  // Cones: adjoining a top point makes any finite poset contractible.
  for (int trial = 0; trial < 8; ++trial) {
    FinitePoset p = random_poset(rng, 3 + trial % 4);
    FinitePoset c;
    c.n = p.n + 1;
    c.leq.assign(c.n, std::vector<uint8_t>(c.n, 0));
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j) c.leq[i][j] = p.leq[i][j];
    for (int i = 0; i < c.n; ++i) c.leq[i][p.n] = 1;
    expect(fails, "cone-contracts", is_contractible(c),
           "cone has a non-trivial core");
    if (!fails.empty()) break;
  }

  // Smith normal form agrees with fraction-free rational elimination.
  {
    std::uniform_int_distribution<int> dim(1, 5), entry(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
      int r = dim(rng), cdim = dim(rng);
      std::vector<std::vector<int64_t>> m(r, std::vector<int64_t>(cdim));
      for (auto& row : m)
        for (auto& x : row) x = entry(rng);
      std::vector<int64_t> d = smith_diagonal(m);
      if (static_cast<int>(d.size()) != rank_q(m)) {
        expect(fails, "snf-rank", false, "diagonal length differs from rank");
        break;
      }
      for (size_t i = 1; i < d.size(); ++i)
        if (d[i] % d[i - 1] != 0) {
          expect(fails, "snf-rank", false, "divisibility chain broken");
          break;
        }
    }
  }

  // Canonical codes are relabeling invariants; mirroring is an involution.
  {
    EnumRequest req;
    req.surface = Surface::Disk;
    req.centers_cw = 1;
    req.centers_ccw = 2;
    Atlas atlas = enumerate_classes(req);
    expect(fails, "atlas-valid", atlas.classes.size() == 31,
           "(1,2)-disk atlas has " + std::to_string(atlas.classes.size()) +
               " classes");
    for (const EnumClass& c : atlas.classes) {
      if (!validate_diagram(c.diagram).ok()) {
        expect(fails, "atlas-valid", false, "class " + code_hex(c.code));
        break;
      }
    }
    for (size_t i = 0; i < atlas.classes.size(); i += 5) {
      const EnumClass& c = atlas.classes[i];
      for (int trial = 0; trial < 6; ++trial)
        if (canonical_code(shuffled(c.diagram, rng)) != c.code) {
          expect(fails, "canonical-relabel", false,
                 "code moved for class " + code_hex(c.code));
          break;
        }
      if (canonical_code(mirrored(mirrored(c.diagram))) != c.code)
        expect(fails, "mirror-involution", false, code_hex(c.code));
    }

    // Degeneration order: closure stays inside the atlas and every cover
    // drops codimension by exactly one.
    std::vector<std::string> escapees = closure_check(atlas);
    expect(fails, "cover-closure", escapees.empty(),
           escapees.empty() ? "" : escapees.front());

    FinitePoset p = build_poset(atlas);
    std::vector<int> codim;
    for (const EnumClass& c : atlas.classes) codim.push_back(c.codim);
    if (fault == 1) {
      // Deliberately defective fixture: a cover that skips a stratum.
      p = poset_of(2, {{0, 1}});
      codim = {2, 0};
    }
    for (auto [lo, hi] : p.cover_pairs())
      if (codim[lo] != codim[hi] + 1) {
        std::ostringstream os;
        os << "cover " << lo << " -> " << hi << " drops codim by "
           << codim[lo] - codim[hi];
        expect(fails, "cover-codim-decrement", false, os.str());
        break;
      }
  }

  return fails;
}

}  // namespace hamflow
