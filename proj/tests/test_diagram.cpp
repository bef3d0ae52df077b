#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "hamflow/diagram.hpp"

using namespace hamflow;
using namespace hamflow::fixtures;

namespace {

std::set<int> face_darts(const Diagram& d, const Faces& f, int dart) {
  std::set<int> out;
  for (int h = 0; h < d.dart_count(); ++h)
    if (f.face_of[h] == f.face_of[dart]) out.insert(h);
  return out;
}

bool has_issue(const ValidationReport& r, const std::string& check) {
  return std::any_of(r.issues.begin(), r.issues.end(),
                     [&](const ValidationIssue& i) { return i.check == check; });
}

}  // namespace

TEST_CASE("saddle-free builders validate") {  // [TRIVIAL]
  CHECK(validate_diagram(make_two_center_sphere()).ok());
  CHECK(validate_diagram(make_center_disk(Rot::CW)).ok());
  CHECK(validate_diagram(make_center_disk(Rot::CCW)).ok());
  CHECK(codim_diagram(make_two_center_sphere()) == 0);
  CHECK(connections(make_center_disk(Rot::CW)).empty());
}

TEST_CASE("figure-eight faces and orientation") {  // [DERIVED]
  Diagram d = fig8_sphere_A();
  REQUIRE(validate_diagram(d).summary() == "ok");

  Faces f = compute_faces(d);
  CHECK(f.face_rep.size() == 3);
  CHECK(f.hole_face == -1);
  // Petals are the one-dart orbits {3} and {1}; the outer face is {0,2}.
  CHECK(face_darts(d, f, 3) == std::set<int>{3});
  CHECK(face_darts(d, f, 1) == std::set<int>{1});
  CHECK(face_darts(d, f, 0) == std::set<int>{0, 2});
  CHECK(f.face_dir[f.face_of[3]] == 1);
  CHECK(f.face_dir[f.face_of[1]] == 1);
  CHECK(f.face_dir[f.face_of[0]] == 0);

  CHECK(codim_diagram(d) == 0);
  auto c = census_of(d);
  CHECK(c.centers_cw == 1);
  CHECK(c.centers_ccw == 2);
  CHECK(c.boundary == Census::Boundary::None);
  REQUIRE(c.saddles.size() == 1);
  CHECK(c.saddles[0] == CensusEntry{Placement::Interior, 2, 1});

  CHECK(validate_diagram(fig8_sphere_B()).ok());
}

TEST_CASE("two-saddle chain: connection bookkeeping") {  // [DERIVED]
  Diagram d = two_saddle_chain_sphere();
  REQUIRE(validate_diagram(d).summary() == "ok");

  Faces f = compute_faces(d);
  CHECK(f.face_rep.size() == 4);
  CHECK(face_darts(d, f, 0) == std::set<int>{0});
  CHECK(face_darts(d, f, 2) == std::set<int>{2, 5});
  CHECK(face_darts(d, f, 7) == std::set<int>{7});
  CHECK(face_darts(d, f, 1) == std::set<int>{1, 3, 4, 6});

  auto conns = connections(d);
  REQUIRE(conns.size() == 1);
  CHECK(conns[0].vertices == std::vector<int>{0, 1});
  CHECK(conns[0].interior_saddles == 2);
  CHECK(conns[0].boundary_circles == 0);
  CHECK(conns[0].codim_m == 0);
  CHECK(conns[0].codim() == 1);
  CHECK(codim_diagram(d) == 1);
}

TEST_CASE("three-saddle chain validates at codimension 2") {  // [DERIVED]
  Diagram d = three_saddle_chain_sphere();
  REQUIRE(validate_diagram(d).summary() == "ok");
  CHECK(codim_diagram(d) == 2);
  Faces f = compute_faces(d);
  CHECK(f.face_rep.size() == 5);
  CHECK(face_darts(d, f, 0) == std::set<int>{0, 2, 4, 6, 8, 10});
}

TEST_CASE("boundary saddles: fan, hole, and arc structure") {  // [DERIVED]
  Diagram d = two_boundary_saddle_disk();
  REQUIRE(validate_diagram(d).summary() == "ok");

  Faces f = compute_faces(d);
  REQUIRE(f.face_rep.size() == 4);
  REQUIRE(f.hole_face >= 0);
  CHECK(face_darts(d, f, 3) == std::set<int>{3, 7});  // hole = both b2 darts
  CHECK(f.face_of[3] == f.hole_face);
  CHECK(face_darts(d, f, 0) == std::set<int>{0, 6});
  CHECK(face_darts(d, f, 1) == std::set<int>{1, 5});
  CHECK(face_darts(d, f, 2) == std::set<int>{2, 4});
  CHECK(f.face_dir[f.face_of[0]] == 1);
  CHECK(f.face_dir[f.face_of[1]] == 0);
  CHECK(f.face_dir[f.face_of[2]] == 1);

  auto conns = connections(d);
  REQUIRE(conns.size() == 1);
  CHECK(conns[0].boundary_circles == 1);
  CHECK(conns[0].interior_saddles == 0);
  CHECK(conns[0].codim_m == 2);
  CHECK(conns[0].codim() == 2);
  CHECK(codim_diagram(d) == 2);

  auto c = census_of(d);
  CHECK(c.boundary == Census::Boundary::Saddled);
  REQUIRE(c.saddles.size() == 1);
  CHECK(c.saddles[0] == CensusEntry{Placement::Boundary, 2, 2});
}

TEST_CASE("validation rejects the torus embedding") {  // [DERIVED]
  auto r = validate_diagram(torus_two_saddle());
  CHECK(!r.ok());
  CHECK(has_issue(r, "NonPlanar"));
}

TEST_CASE("validation catches broken invariants") {  // [TRIVIAL]
  SUBCASE("direction alternation") {
    Diagram d = fig8_sphere_A();
    d.out[1] = 0;
    auto r = validate_diagram(d);
    CHECK(has_issue(r, "DirectionInconsistent"));
  }
  SUBCASE("fake saddle") {
    Diagram d = fig8_sphere_A();
    d.vertex_kind[0].two_k = 0;
    CHECK(has_issue(validate_diagram(d), "FakeSaddlePresent"));
  }
  SUBCASE("index sum") {
    Diagram d = fig8_sphere_A();
    d.centers.push_back({Rot::CW});
    d.regions.push_back(
        {{RegionEnd::CenterEnd, 3}, {RegionEnd::CenterEnd, 3}});
    CHECK(has_issue(validate_diagram(d), "IndexSumMismatch"));
  }
  SUBCASE("center calibration") {
    Diagram d = fig8_sphere_A();
    d.centers[0].rot = Rot::CW;  // petal runs out: must be CCW
    CHECK(has_issue(validate_diagram(d), "FaceContentViolation"));
  }
  SUBCASE("face used twice") {
    Diagram d = fig8_sphere_A();
    d.regions[1].a = {RegionEnd::Face, 3};
    CHECK(has_issue(validate_diagram(d), "FaceContentViolation"));
  }
  SUBCASE("twin fixed point") {
    Diagram d = fig8_sphere_A();
    d.twin = {0, 1, 2, 3};
    CHECK(!validate_diagram(d).ok());
  }
}

TEST_CASE("index arithmetic") {  // [TRIVIAL]
  CHECK(index2_of({Placement::Interior, 2}) == -2);
  CHECK(codim_saddle({Placement::Interior, 2}) == 0);
  CHECK(codim_saddle({Placement::Interior, 4}) == 2);
  CHECK(codim_saddle({Placement::Boundary, 1}) == 0);
  CHECK(codim_saddle({Placement::Boundary, 2}) == 1);
  CHECK(codim_saddle({Placement::Boundary, 4}) == 3);
}
