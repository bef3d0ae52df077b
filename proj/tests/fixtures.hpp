#pragma once
// Hand-checked diagrams shared by the unit tests.  Faces, directions, and
// region contents were derived on paper from explicit planar drawings; the
// tests treat them as frozen oracles.

#include <vector>

#include "hamflow/diagram.hpp"

namespace hamflow::fixtures {

// Figure-eight on the sphere: one 1-saddle, both separatrices self-connected.
// Darts 0..3 CCW = (45deg in, 135deg out, 225deg in, 315deg out).
// Type A fills the petals counterclockwise (petal faces {3} and {1}, both
// `out`); type B is its mirror image.
inline Diagram fig8_sphere_A() {
  Diagram d;
  d.surface = Surface::Sphere;
  append_interior_star(d, 2, /*first_out=*/false);
  d.twin = {3, 2, 1, 0};
  d.centers = {{Rot::CCW}, {Rot::CCW}, {Rot::CW}};
  d.regions = {{{RegionEnd::Face, 3}, {RegionEnd::CenterEnd, 0}},
               {{RegionEnd::Face, 1}, {RegionEnd::CenterEnd, 1}},
               {{RegionEnd::Face, 0}, {RegionEnd::CenterEnd, 2}}};
  return d;
}

inline Diagram fig8_sphere_B() {
  Diagram d;
  d.surface = Surface::Sphere;
  append_interior_star(d, 2, /*first_out=*/false);
  d.twin = {1, 0, 3, 2};
  d.centers = {{Rot::CW}, {Rot::CW}, {Rot::CCW}};
  d.regions = {{{RegionEnd::Face, 0}, {RegionEnd::CenterEnd, 0}},
               {{RegionEnd::Face, 2}, {RegionEnd::CenterEnd, 1}},
               {{RegionEnd::Face, 1}, {RegionEnd::CenterEnd, 2}}};
  return d;
}

// Two 1-saddles x (darts 0..3) and y (darts 4..7) joined by two separatrices,
// with one self-loop each: the codimension-1 heteroclinic class on the
// (1,3)-sphere.  CCW star of x is (0, 3, 2, 1); of y is (4, 5, 6, 7).
inline Diagram two_saddle_chain_sphere() {
  Diagram d;
  d.surface = Surface::Sphere;
  d.vertex_kind = {{Placement::Interior, 2}, {Placement::Interior, 2}};
  d.next = {3, 0, 1, 2, 5, 6, 7, 4};
  d.twin = {3, 5, 6, 0, 7, 1, 2, 4};
  d.dart_vertex = {0, 0, 0, 0, 1, 1, 1, 1};
  d.out = {1, 0, 1, 0, 0, 1, 0, 1};
  d.boundary = {0, 0, 0, 0, 0, 0, 0, 0};
  d.centers = {{Rot::CCW}, {Rot::CCW}, {Rot::CCW}, {Rot::CW}};
  d.regions = {{{RegionEnd::Face, 0}, {RegionEnd::CenterEnd, 0}},
               {{RegionEnd::Face, 2}, {RegionEnd::CenterEnd, 1}},
               {{RegionEnd::Face, 7}, {RegionEnd::CenterEnd, 2}},
               {{RegionEnd::Face, 1}, {RegionEnd::CenterEnd, 3}}};
  return d;
}

// Chain y - x - z of three 1-saddles (x in the middle) on the (1,4)-sphere,
// codimension 2.  x = darts 0..3, y = 4..7, z = 8..11; y and z carry one
// self-loop each ({5,6} and {8,11}); x is joined to y by {1,4},{2,7} and to
// z by {0,9},{3,10}.
inline Diagram three_saddle_chain_sphere() {
  Diagram d;
  d.surface = Surface::Sphere;
  d.vertex_kind = {{Placement::Interior, 2},
                   {Placement::Interior, 2},
                   {Placement::Interior, 2}};
  d.next = {1, 2, 3, 0, 5, 6, 7, 4, 9, 10, 11, 8};
  d.twin = {9, 4, 7, 10, 1, 6, 5, 2, 11, 0, 3, 8};
  d.dart_vertex = {0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2};
  d.out = {0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1};
  d.boundary = std::vector<uint8_t>(12, 0);
  d.centers = {{Rot::CCW}, {Rot::CCW}, {Rot::CCW}, {Rot::CCW}, {Rot::CW}};
  d.regions = {{{RegionEnd::Face, 5}, {RegionEnd::CenterEnd, 0}},
               {{RegionEnd::Face, 11}, {RegionEnd::CenterEnd, 1}},
               {{RegionEnd::Face, 1}, {RegionEnd::CenterEnd, 2}},
               {{RegionEnd::Face, 3}, {RegionEnd::CenterEnd, 3}},
               {{RegionEnd::Face, 0}, {RegionEnd::CenterEnd, 4}}};
  return d;
}

// Two boundary 1-saddles u ( darts 0..3) and v (4..7) on the disk, all four
// interior separatrices crossing between them: codimension 2 on the
// (1,2)-disk.  Fans run b1, f1, f2, b2 = (0,1,2,3) and (4,5,6,7).
inline Diagram two_boundary_saddle_disk() {
  Diagram d;
  d.surface = Surface::Disk;
  d.vertex_kind = {{Placement::Boundary, 2}, {Placement::Boundary, 2}};
  d.next = {1, 2, 3, 0, 5, 6, 7, 4};
  d.twin = {7, 6, 5, 4, 3, 2, 1, 0};
  d.dart_vertex = {0, 0, 0, 0, 1, 1, 1, 1};
  d.out = {1, 0, 1, 0, 1, 0, 1, 0};
  d.boundary = {1, 0, 0, 1, 1, 0, 0, 1};
  d.centers = {{Rot::CCW}, {Rot::CW}, {Rot::CCW}};
  d.regions = {{{RegionEnd::Face, 0}, {RegionEnd::CenterEnd, 0}},
               {{RegionEnd::Face, 1}, {RegionEnd::CenterEnd, 1}},
               {{RegionEnd::Face, 2}, {RegionEnd::CenterEnd, 2}}};
  return d;
}

// One interior 2-saddle whose separatrices bound three petals in a row:
// the (1,3)-sphere class of codimension 2.  Star CCW = (0..5), petals
// {0}, {2}, {4}; trefoil outer face {1,3,5}.
inline Diagram monkey4_sphere() {
  Diagram d;
  d.surface = Surface::Sphere;
  append_interior_star(d, 4, /*first_out=*/true);
  d.twin = {1, 0, 3, 2, 5, 4};
  d.centers = {{Rot::CCW}, {Rot::CCW}, {Rot::CCW}, {Rot::CW}};
  d.regions = {{{RegionEnd::Face, 0}, {RegionEnd::CenterEnd, 0}},
               {{RegionEnd::Face, 2}, {RegionEnd::CenterEnd, 1}},
               {{RegionEnd::Face, 4}, {RegionEnd::CenterEnd, 2}},
               {{RegionEnd::Face, 1}, {RegionEnd::CenterEnd, 3}}};
  return d;
}

// A single boundary 2-saddle owning the whole circle: the deepest class on
// the (1,2)-disk, codimension 3.  Fan = (b1=0, 1, 2, 3, 4, b2=5), arc 0<->5,
// chords {1,4} and {2,3}; faces {0,4}, {2} (both ccw) and {1,3} (cw).
inline Diagram boundary_saddle4_disk() {
  Diagram d;
  d.surface = Surface::Disk;
  append_boundary_fan(d, 4, /*b1_out=*/true);
  d.twin = {5, 4, 3, 2, 1, 0};
  d.centers = {{Rot::CCW}, {Rot::CCW}, {Rot::CW}};
  d.regions = {{{RegionEnd::Face, 0}, {RegionEnd::CenterEnd, 0}},
               {{RegionEnd::Face, 2}, {RegionEnd::CenterEnd, 1}},
               {{RegionEnd::Face, 1}, {RegionEnd::CenterEnd, 2}}};
  return d;
}

// Single interior 2-saddle with antipodal self-matching: embeds on the torus,
// not the sphere.  Every local check passes; the Euler count does not.
inline Diagram torus_two_saddle() {
  Diagram d;
  d.surface = Surface::Sphere;
  append_interior_star(d, 4, /*first_out=*/true);
  d.twin = {3, 4, 5, 0, 1, 2};
  d.centers = {{Rot::CCW}, {Rot::CCW}, {Rot::CW}, {Rot::CW}};
  d.regions = {{{RegionEnd::Face, 0}, {RegionEnd::CenterEnd, 0}},
               {{RegionEnd::Face, 1}, {RegionEnd::CenterEnd, 2}}};
  return d;
}

}  // namespace hamflow::fixtures
