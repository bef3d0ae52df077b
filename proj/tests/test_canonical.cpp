#include <numeric>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "hamflow/canonical.hpp"

using namespace hamflow;
using namespace hamflow::fixtures;

namespace {

Diagram shuffled(const Diagram& d, std::mt19937& rng) {
  std::vector<int32_t> dp(d.dart_count()), vp(d.vertex_count());
  std::iota(dp.begin(), dp.end(), 0);
  std::iota(vp.begin(), vp.end(), 0);
  std::shuffle(dp.begin(), dp.end(), rng);
  std::shuffle(vp.begin(), vp.end(), rng);
  return relabeled(d, dp, vp);
}

}  // namespace

TEST_CASE("canonical code is a relabeling invariant") {  // [DERIVED]
  std::mt19937 rng(20240817);
  for (const Diagram& d :
       {fig8_sphere_A(), fig8_sphere_B(), two_saddle_chain_sphere(),
        three_saddle_chain_sphere(), two_boundary_saddle_disk()}) {
    Code ref = canonical_code(d);
    REQUIRE(!ref.empty());
    for (int trial = 0; trial < 50; ++trial) {
      Diagram s = shuffled(d, rng);
      CHECK(validate_diagram(s).ok());
      CHECK(canonical_code(s) == ref);
    }
  }
}

TEST_CASE("codes separate the mirror pair") {  // [DERIVED]
  Code a = canonical_code(fig8_sphere_A());
  Code b = canonical_code(fig8_sphere_B());
  CHECK(a != b);
  CHECK(canonical_code(mirrored(fig8_sphere_A())) == b);
  CHECK(canonical_code(mirrored(fig8_sphere_B())) == a);
  CHECK(canonical_code_mirror_merged(fig8_sphere_A()) ==
        canonical_code_mirror_merged(fig8_sphere_B()));
}

TEST_CASE("mirroring is an involution preserving validity") {  // [TRIVIAL]
  for (const Diagram& d :
       {fig8_sphere_A(), two_saddle_chain_sphere(), three_saddle_chain_sphere(),
        two_boundary_saddle_disk()}) {
    Diagram m = mirrored(d);
    CHECK(validate_diagram(m).summary() == "ok");
    CHECK(canonical_code(mirrored(m)) == canonical_code(d));
    CHECK(codim_diagram(m) == codim_diagram(d));
  }
}

TEST_CASE("saddle-free specials have distinct stable codes") {  // [TRIVIAL]
  Code sph = canonical_code(make_two_center_sphere());
  Code cw = canonical_code(make_center_disk(Rot::CW));
  Code ccw = canonical_code(make_center_disk(Rot::CCW));
  CHECK(sph != cw);
  CHECK(cw != ccw);
  CHECK(canonical_code_mirror_merged(make_center_disk(Rot::CW)) ==
        canonical_code_mirror_merged(make_center_disk(Rot::CCW)));
  CHECK(code_hex(sph).size() == 16);
  CHECK(code_hex(sph) != code_hex(cw));
}

TEST_CASE("brute-force equivalence agrees with codes") {  // [DERIVED]
  std::mt19937 rng(7);
  Diagram a = two_boundary_saddle_disk();
  Diagram s = shuffled(a, rng);
  CHECK(equivalent_bruteforce(a, s));
  CHECK(!equivalent_bruteforce(fig8_sphere_A(), fig8_sphere_B()));
  CHECK(!equivalent_bruteforce(a, fig8_sphere_A()));
  CHECK(equivalent_bruteforce(make_two_center_sphere(),
                              make_two_center_sphere()));
  CHECK(!equivalent_bruteforce(make_center_disk(Rot::CW),
                               make_center_disk(Rot::CCW)));
}

TEST_CASE("mirror of the boundary fixture stays equivalent-checkable") {
  // The mirrored disk diagram is a genuinely different class here: the pools
  // of petal orientations flip.  [DERIVED]
  Diagram d = two_boundary_saddle_disk();
  CHECK(!equivalent_bruteforce(d, mirrored(d)));
  CHECK(canonical_code(d) != canonical_code(mirrored(d)));
}
