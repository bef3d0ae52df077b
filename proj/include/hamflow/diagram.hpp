#pragma once
// Combinatorial multi-saddle connection diagrams on the sphere and the closed
// disk.  A diagram is an embedded directed graph given by dart permutations
// (rotation `next` and involution `twin`), together with the annulus structure
// of its complement: every complementary region is an annulus with two ends,
// and each end is either a face circuit of a saddle component, a center, or
// the inner side of a periodic boundary circle.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hamflow {

enum class Surface : uint8_t { Sphere, Disk };

enum class Placement : uint8_t { Interior, Boundary };

// Saddle weights are half-integers; we store 2k as an integer.  An interior
// k-saddle has 2k+2 separatrix germs; a boundary saddle has 2k interior germs
// plus the two boundary-arc germs.
struct SaddleKind {
  Placement placement = Placement::Interior;
  int two_k = 2;
  friend bool operator==(const SaddleKind&, const SaddleKind&) = default;
  friend auto operator<=>(const SaddleKind&, const SaddleKind&) = default;
};

enum class Rot : uint8_t { CW, CCW };

struct Center {
  Rot rot = Rot::CCW;
  friend bool operator==(const Center&, const Center&) = default;
};

// One end of a complementary annulus.
struct RegionEnd {
  enum Kind : uint8_t { Face, CenterEnd, CircleInside } kind = Face;
  // Face: any dart on the face circuit (normalised to the orbit minimum).
  // CenterEnd: index into centers.  CircleInside: id 0 (single circle, p<=1).
  int id = 0;
  friend bool operator==(const RegionEnd&, const RegionEnd&) = default;
};

struct Region {
  RegionEnd a, b;
};

struct Diagram {
  Surface surface = Surface::Sphere;

  // Vertices are saddles.  vertex_kind[v] describes vertex v.
  std::vector<SaddleKind> vertex_kind;

  // Dart arrays, all of equal size.  next = counterclockwise rotation at the
  // dart's vertex; twin pairs the two darts of each edge; out marks darts
  // whose edge is directed away from the dart's vertex.  boundary marks the
  // two boundary-arc germs of each boundary saddle.
  std::vector<int32_t> next;
  std::vector<int32_t> twin;
  std::vector<int32_t> dart_vertex;
  std::vector<uint8_t> out;
  std::vector<uint8_t> boundary;

  // Disk only: true when the boundary circle carries no saddles.
  bool boundary_periodic = false;

  std::vector<Center> centers;
  std::vector<Region> regions;

  int dart_count() const { return static_cast<int>(next.size()); }
  int vertex_count() const { return static_cast<int>(vertex_kind.size()); }
  int prev(int d) const;  // inverse of next

  bool has_boundary_circle() const {
    return surface == Surface::Disk;
  }
  bool boundary_saddled() const;
};

// --- basic numerology -------------------------------------------------------

// 2 * index of a saddle (always negative) / of a center (+2).
inline int index2_of(const SaddleKind& k) { return -k.two_k; }

// Codimension contributed by a single saddle: 2(k-1) interior, 2k-1 boundary.
inline int codim_saddle(const SaddleKind& k) {
  return k.placement == Placement::Interior ? k.two_k - 2 : k.two_k - 1;
}

// A connection: one connected component of the diagram graph (saddles,
// separatrices, and any boundary arcs they lie on).
struct Connection {
  std::vector<int> vertices;        // vertex ids, ascending
  int interior_saddles = 0;         // n_m
  int boundary_circles = 0;         // number of boundary circles it contains
  int codim_m = 0;                  // sum of member saddle codims
  int codim_h() const { return boundary_circles + interior_saddles - 1; }
  int codim() const { return codim_m + codim_h(); }
};

std::vector<Connection> connections(const Diagram& d);

// Total codimension of the diagram (sum over connections).
int codim_diagram(const Diagram& d);

// Census: the isotopy-free fingerprint used in reports.
struct CensusEntry {
  Placement placement;
  int two_k;
  int count;
  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};
struct Census {
  int centers_cw = 0;
  int centers_ccw = 0;
  std::vector<CensusEntry> saddles;  // sorted by (placement, two_k)
  enum class Boundary : uint8_t { None, Periodic, Saddled } boundary =
      Boundary::None;
  friend bool operator==(const Census&, const Census&) = default;
};
Census census_of(const Diagram& d);

// --- faces ------------------------------------------------------------------

// Face circuits are the orbits of d |-> prev(twin[d]); each circuit traces
// the face lying to the left of its darts.  For a saddled disk boundary,
// exactly one orbit consists solely of boundary-arc darts: the hole (the
// removed disk); it is not a face of the surface.
struct Faces {
  std::vector<int32_t> face_of;     // dart -> face id
  std::vector<int32_t> face_rep;    // face id -> minimal dart
  std::vector<int8_t> face_dir;     // face id -> 1 if darts are `out`, 0 if
                                    // `in`, -1 if mixed (only legal for hole)
  int hole_face = -1;               // face id of the hole, or -1
};
Faces compute_faces(const Diagram& d);

// Components of the diagram graph (union of twin and same-vertex relations).
// Returns dart -> component id and the number of components.
std::pair<std::vector<int32_t>, int> dart_components(const Diagram& d);

// --- validation -------------------------------------------------------------

struct ValidationIssue {
  std::string check;   // e.g. "IndexSumMismatch"
  std::string detail;
};
struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string summary() const;
};

// Full structural validation: permutation sanity, saddle star shapes,
// direction alternation, planarity, face/region structure (every face in
// exactly one region, region graph a tree, circulation compatibility,
// center orientation consistency), index sum, no fake saddles.
ValidationReport validate_diagram(const Diagram& d);

// Convenience: orientation assigned to a center sitting against a face with
// direction bit w (1 = circuit runs with the flow).
inline Rot center_rot_for_face_dir(int w) { return w ? Rot::CCW : Rot::CW; }

// --- small builders (shared by tests and the enumerator) --------------------

// The saddle-free sphere diagram: two centers joined by one annulus.
Diagram make_two_center_sphere();
// The saddle-free disk diagram: periodic boundary around one center.
Diagram make_center_disk(Rot rot);

// Star construction helpers used by the enumerator and the move engine.
// Appends an interior saddle with 2k+2 darts; returns first dart id.
int append_interior_star(Diagram& d, int two_k, bool first_out);
// Appends a boundary saddle fan; returns first dart id (the b1 germ).
int append_boundary_fan(Diagram& d, int two_k, bool b1_out);

}  // namespace hamflow
