#include <algorithm>
#include <vector>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "hamflow/io.hpp"

using namespace hamflow;
using namespace hamflow::fixtures;

namespace {

Atlas disk12() {
  EnumRequest r;
  r.surface = Surface::Disk;
  r.centers_cw = 1;
  r.centers_ccw = 2;
  return enumerate_classes(r);
}

Atlas sphere12() {
  EnumRequest r;
  r.surface = Surface::Sphere;
  r.centers_cw = 1;
  r.centers_ccw = 2;
  return enumerate_classes(r);
}

}  // namespace

TEST_CASE("atlas json round trip") {
  for (const Atlas& a : {disk12(), sphere12()}) {
    std::string text = atlas_json(a);
    Atlas back = atlas_from_json(text);
    REQUIRE(back.classes.size() == a.classes.size());
    CHECK(back.request.surface == a.request.surface);
    CHECK(back.request.centers_cw == a.request.centers_cw);
    CHECK(back.request.merge_mirrors == a.request.merge_mirrors);
    for (size_t i = 0; i < a.classes.size(); ++i) {
      CHECK(back.classes[i].code == a.classes[i].code);
      CHECK(back.classes[i].codim == a.classes[i].codim);
      CHECK(back.classes[i].diagram.next == a.classes[i].diagram.next);
      CHECK(back.classes[i].diagram.twin == a.classes[i].diagram.twin);
    }
    // Byte stability: serialize -> parse -> serialize is the identity.
    CHECK(atlas_json(back) == text);
  }
}

TEST_CASE("atlas json schema surface") {
  std::string text = atlas_json(disk12());

  // The census block reflects the class, boundary key present on the disk.
  CHECK(text.find("\"request\"") != std::string::npos);
  CHECK(text.find("\"boundary\": \"periodic\"") != std::string::npos);
  CHECK(text.find("\"boundary\": \"saddled\"") != std::string::npos);
  CHECK(text.find("\"two_k\"") != std::string::npos);
  // Sphere atlases carry no boundary census key.
  std::string stext = atlas_json(sphere12());
  CHECK(stext.find("\"boundary\": \"") == std::string::npos);

  CHECK_THROWS_AS(atlas_from_json("{"), SchemaError);
  CHECK_THROWS_AS(atlas_from_json("[]"), SchemaError);
  CHECK_THROWS_AS(atlas_from_json("{\"classes\": []}"), SchemaError);

  // Tampered ids and structure are rejected.
  std::string bad = text;
  size_t at = bad.find("\"id\": \"");
  REQUIRE(at != std::string::npos);
  bad[at + 7] = bad[at + 7] == '0' ? '1' : '0';
  CHECK_THROWS_AS(atlas_from_json(bad), SchemaError);

  std::string twisted = text;
  at = twisted.find("\"next\": [");
  REQUIRE(at != std::string::npos);
  twisted.replace(at, 9, "\"next\": [999,");
  CHECK_THROWS_AS(atlas_from_json(twisted), SchemaError);
}

TEST_CASE("analysis of the (1,2)-disk atlas") {
  AnalysisReport r = analyze_atlas(disk12(), Coefficients::Z);
  REQUIRE(r.components.size() == 1);
  const ComponentReport& c = r.components[0];
  CHECK(c.members.size() == 31);

  // [DERIVED] Ten-point core (2 of codim 3, 2 of codim 2, 3 of codim 1,
  // 3 of codim 0), not contractible, S^3 homology for both the core and
  // the full component.  Removing any single minimal point of the core
  // leaves a homology ball, so none of the ten is redundant.
  CHECK(c.core_points.size() == 10);
  std::vector<int> profile(4, 0);
  for (int i : c.core_points) ++profile[r.atlas.classes[i].codim];
  CHECK(profile == std::vector<int>{3, 3, 2, 2});
  CHECK(!c.contractible);
  CHECK(c.sphere_match == 3);
  REQUIRE(c.core_homology.groups.size() == 4);
  for (int d = 0; d < 4; ++d) {
    CHECK(c.core_homology.groups[d].betti == (d == 0 || d == 3 ? 1 : 0));
    CHECK(c.core_homology.groups[d].torsion.empty());
  }
  CHECK(homology_brief(c.full_homology) == "b=(1,0,0,1)");

  std::string text = report_json(r);
  CHECK(text.find("\"sphere_match\": 3") != std::string::npos);
  CHECK(text.find("\"covers\"") != std::string::npos);
  CHECK(text.find("\"betti\"") != std::string::npos);
}

TEST_CASE("analysis of sphere atlases is contractible") {  // [PAPER]
  AnalysisReport r = analyze_atlas(sphere12(), Coefficients::Z);
  REQUIRE(!r.components.empty());
  for (const ComponentReport& c : r.components) {
    CHECK(c.contractible);
    CHECK(c.core_points.size() == 1);
    CHECK(c.sphere_match == -1);
    CHECK(homology_brief(c.core_homology) == "b=(1)");
  }
}

TEST_CASE("analysis respects the coefficient field") {
  AnalysisReport r = analyze_atlas(disk12(), Coefficients::Z2);
  REQUIRE(r.components.size() == 1);
  const ComponentReport& c = r.components[0];
  for (const HomologyGroup& g : c.core_homology.groups)
    CHECK(g.torsion.empty());
  CHECK(homology_brief(c.core_homology) == "b=(1,0,0,1)");
  CHECK(report_json(r).find("\"coefficients\": \"z2\"") != std::string::npos);
}

TEST_CASE("selftest battery") {
  CHECK(selftest(1).empty());
  // Verdicts do not depend on the seed.
  CHECK(selftest(0xfeedface).empty());
  CHECK(selftest(42).empty());

  std::vector<std::string> fails = selftest(1, 1);
  REQUIRE(!fails.empty());
  bool named = false;
  for (const std::string& f : fails)
    named |= f.find("cover-codim-decrement") != std::string::npos;
  CHECK(named);
  // The fault verdict is seed-independent too.
  CHECK(selftest(7, 1).size() == fails.size());
}
