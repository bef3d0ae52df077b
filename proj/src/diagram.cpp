#include "hamflow/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hamflow {

namespace {

std::vector<int32_t> prev_array(const Diagram& d) {
  std::vector<int32_t> prev(d.next.size(), -1);
  for (int h = 0; h < d.dart_count(); ++h) {
    int n = d.next[h];
    if (n >= 0 && n < d.dart_count()) prev[n] = h;
  }
  return prev;
}

}  // namespace

int Diagram::prev(int d) const {
  for (int h = 0; h < dart_count(); ++h)
    if (next[h] == d) return h;
  return -1;
}

bool Diagram::boundary_saddled() const {
  for (const auto& k : vertex_kind)
    if (k.placement == Placement::Boundary) return true;
  return false;
}

Faces compute_faces(const Diagram& d) {
  Faces f;
  const int n = d.dart_count();
  f.face_of.assign(n, -1);
  auto prev = prev_array(d);
  for (int h = 0; h < n; ++h) {
    if (f.face_of[h] >= 0) continue;
    int id = static_cast<int>(f.face_rep.size());
    bool all_out = true, all_in = true, all_boundary = true;
    int cur = h;
    do {
      f.face_of[cur] = id;
      if (d.out[cur]) all_in = false; else all_out = false;
      if (!d.boundary[cur]) all_boundary = false;
      cur = prev[d.twin[cur]];
    } while (cur != h && cur >= 0 && f.face_of[cur] < 0);
    f.face_rep.push_back(h);
    f.face_dir.push_back(all_out ? 1 : (all_in ? 0 : -1));
    if (all_boundary && f.hole_face < 0) f.hole_face = id;
  }
  return f;
}

std::pair<std::vector<int32_t>, int> dart_components(const Diagram& d) {
  const int n = d.dart_count();
  std::vector<int32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int h = 0; h < n; ++h) {
    unite(h, d.twin[h]);
    unite(h, d.next[h]);
  }
  std::vector<int32_t> comp(n, -1);
  int count = 0;
  for (int h = 0; h < n; ++h) {
    int r = find(h);
    if (comp[r] < 0) comp[r] = count++;
    comp[h] = comp[r];
  }
  return {comp, count};
}

std::vector<Connection> connections(const Diagram& d) {
  auto [comp, count] = dart_components(d);
  std::vector<Connection> out(count);
  std::vector<char> seen(d.vertex_count(), 0);
  for (int h = 0; h < d.dart_count(); ++h) {
    int v = d.dart_vertex[h];
    if (seen[v]) continue;
    seen[v] = 1;
    Connection& c = out[comp[h]];
    c.vertices.push_back(v);
    const SaddleKind& k = d.vertex_kind[v];
    c.codim_m += codim_saddle(k);
    if (k.placement == Placement::Interior) ++c.interior_saddles;
  }
  for (auto& c : out) {
    std::sort(c.vertices.begin(), c.vertices.end());
    for (int v : c.vertices)
      if (d.vertex_kind[v].placement == Placement::Boundary) {
        c.boundary_circles = 1;  // single boundary circle when p <= 1
        break;
      }
  }
  std::sort(out.begin(), out.end(), [](const Connection& a, const Connection& b) {
    return a.vertices.front() < b.vertices.front();
  });
  return out;
}

int codim_diagram(const Diagram& d) {
  int total = 0;
  for (const auto& c : connections(d)) total += c.codim();
  return total;
}

Census census_of(const Diagram& d) {
  Census c;
  for (const auto& ctr : d.centers)
    (ctr.rot == Rot::CW ? c.centers_cw : c.centers_ccw)++;
  std::map<std::pair<int, int>, int> tally;  // (placement, two_k) -> count
  for (const auto& k : d.vertex_kind)
    tally[{k.placement == Placement::Boundary ? 1 : 0, k.two_k}]++;
  for (const auto& [key, n] : tally)
    c.saddles.push_back({key.first ? Placement::Boundary : Placement::Interior,
                         key.second, n});
  if (d.surface == Surface::Disk)
    c.boundary = d.boundary_periodic ? Census::Boundary::Periodic
                                     : Census::Boundary::Saddled;
  return c;
}

std::string ValidationReport::summary() const {
  if (issues.empty()) return "ok";
  std::ostringstream os;
  for (size_t i = 0; i < issues.size(); ++i) {
    if (i) os << "; ";
    os << issues[i].check << ": " << issues[i].detail;
  }
  return os.str();
}

ValidationReport validate_diagram(const Diagram& d) {
  ValidationReport r;
  auto issue = [&](std::string check, std::string detail) {
    r.issues.push_back({std::move(check), std::move(detail)});
  };
  const int n = d.dart_count();
  const int nv = d.vertex_count();

  // Stage 0: array shape and permutation sanity.  Later stages dereference
  // freely, so bail out if anything here is broken.
  if (static_cast<int>(d.twin.size()) != n ||
      static_cast<int>(d.dart_vertex.size()) != n ||
      static_cast<int>(d.out.size()) != n ||
      static_cast<int>(d.boundary.size()) != n) {
    issue("MalformedArrays", "dart array sizes disagree");
    return r;
  }
  for (int h = 0; h < n; ++h) {
    if (d.next[h] < 0 || d.next[h] >= n || d.twin[h] < 0 || d.twin[h] >= n ||
        d.dart_vertex[h] < 0 || d.dart_vertex[h] >= nv) {
      issue("MalformedArrays", "dart " + std::to_string(h) + " out of range");
      return r;
    }
  }
  {
    std::vector<char> hit(n, 0);
    for (int h = 0; h < n; ++h) hit[d.next[h]] = 1;
    for (int h = 0; h < n; ++h)
      if (!hit[h]) {
        issue("MalformedPermutation", "next is not a permutation");
        return r;
      }
  }
  for (int h = 0; h < n; ++h) {
    if (d.twin[d.twin[h]] != h || d.twin[h] == h) {
      issue("MalformedPermutation", "twin is not a fixed-point-free involution");
      return r;
    }
    if (d.dart_vertex[d.next[h]] != d.dart_vertex[h]) {
      issue("MalformedPermutation", "next leaves its vertex at dart " +
                                        std::to_string(h));
      return r;
    }
  }
  // One next-cycle per vertex.
  {
    std::vector<int> degree(nv, 0);
    for (int h = 0; h < n; ++h) degree[d.dart_vertex[h]]++;
    std::vector<char> seen(n, 0);
    for (int h = 0; h < n; ++h) {
      if (seen[h]) continue;
      int len = 0, cur = h;
      do {
        seen[cur] = 1;
        ++len;
        cur = d.next[cur];
      } while (cur != h);
      if (len != degree[d.dart_vertex[h]]) {
        issue("MalformedStar", "vertex " + std::to_string(d.dart_vertex[h]) +
                                   " has more than one rotation cycle");
        return r;
      }
    }
    for (int v = 0; v < nv; ++v)
      if (degree[v] == 0) {
        issue("MalformedStar", "vertex " + std::to_string(v) + " has no darts");
        return r;
      }
  }

  // Stage 1: star shapes per saddle kind.
  std::vector<std::vector<int>> star(nv);  // one full next-cycle per vertex
  {
    std::vector<char> started(nv, 0);
    for (int h = 0; h < n; ++h) {
      int v = d.dart_vertex[h];
      if (started[v]) continue;
      started[v] = 1;
      int cur = h;
      do {
        star[v].push_back(cur);
        cur = d.next[cur];
      } while (cur != h);
    }
  }
  std::vector<int> b1_of(nv, -1), b2_of(nv, -1);
  for (int v = 0; v < nv; ++v) {
    const SaddleKind& k = d.vertex_kind[v];
    const auto& s = star[v];
    const int deg = static_cast<int>(s.size());
    if (k.two_k <= 0) {
      issue("FakeSaddlePresent", "vertex " + std::to_string(v) +
                                     " has weight 2k=" + std::to_string(k.two_k));
      continue;
    }
    if (deg != k.two_k + 2) {
      issue("MalformedStar", "vertex " + std::to_string(v) + " degree " +
                                 std::to_string(deg) + " != 2k+2");
      continue;
    }
    if (k.placement == Placement::Interior) {
      if (k.two_k % 2 != 0)
        issue("MalformedStar", "interior vertex " + std::to_string(v) +
                                   " has half-odd weight");
      for (int h : s)
        if (d.boundary[h])
          issue("MalformedStar", "interior vertex " + std::to_string(v) +
                                     " carries a boundary dart");
      for (int h : s)
        if (d.out[h] == d.out[d.next[h]])
          issue("DirectionInconsistent",
                "no alternation at interior vertex " + std::to_string(v));
    } else {
      if (d.surface != Surface::Disk)
        issue("MalformedBoundary", "boundary saddle on a sphere");
      if (d.boundary_periodic)
        issue("MalformedBoundary",
              "boundary saddle on a periodic boundary circle");
      int nb = 0, b2 = -1;
      for (int h : s)
        if (d.boundary[h]) {
          ++nb;
          if (d.boundary[d.next[h]]) b2 = h;
        }
      if (nb != 2 || b2 < 0) {
        issue("MalformedBoundary", "vertex " + std::to_string(v) +
                                       " lacks an adjacent boundary dart pair");
        continue;
      }
      b2_of[v] = b2;
      b1_of[v] = d.next[b2];
      // Fan b1 = f_0, ..., b2 = f_{2k+1}: alternation everywhere except the
      // (b2, b1) wrap.
      int cur = b1_of[v];
      for (int i = 0; i + 1 < deg; ++i) {
        if (d.out[cur] == d.out[d.next[cur]])
          issue("DirectionInconsistent",
                "no alternation in boundary fan at vertex " + std::to_string(v));
        cur = d.next[cur];
      }
      if (cur != b2)
        issue("MalformedBoundary",
              "boundary darts not at fan ends at vertex " + std::to_string(v));
    }
  }

  // Stage 2: edges.
  for (int h = 0; h < n; ++h) {
    if (h < d.twin[h]) {
      if (d.out[h] == d.out[d.twin[h]])
        issue("DirectionInconsistent",
              "edge " + std::to_string(h) + "-" + std::to_string(d.twin[h]) +
                  " lacks one out and one in germ");
      if (d.boundary[h] != d.boundary[d.twin[h]])
        issue("MalformedBoundary",
              "edge pairs a boundary dart with an interior dart");
    }
  }
  // Boundary circle: arcs twin b1 germs to b2 germs and visit every boundary
  // saddle in one cycle.
  std::vector<int> boundary_vertices;
  for (int v = 0; v < nv; ++v)
    if (d.vertex_kind[v].placement == Placement::Boundary)
      boundary_vertices.push_back(v);
  if (d.surface == Surface::Sphere && d.boundary_periodic)
    issue("MalformedBoundary", "periodic boundary flag on a sphere");
  if (d.surface == Surface::Disk && d.boundary_periodic &&
      !boundary_vertices.empty())
    issue("MalformedBoundary", "periodic flag with boundary saddles");
  if (d.surface == Surface::Disk && !d.boundary_periodic &&
      boundary_vertices.empty())
    issue("MalformedBoundary", "disk boundary is neither periodic nor saddled");
  if (!boundary_vertices.empty() && b1_of[boundary_vertices[0]] >= 0) {
    bool wiring_ok = true;
    for (int v : boundary_vertices) {
      int t = b1_of[v] >= 0 ? d.twin[b1_of[v]] : -1;
      if (t < 0 || b2_of[d.dart_vertex[t]] != t) {
        issue("MalformedBoundary",
              "boundary arc from vertex " + std::to_string(v) +
                  " does not land on a fan end");
        wiring_ok = false;
      }
    }
    if (wiring_ok) {
      std::set<int> visited;
      int v = boundary_vertices[0];
      while (visited.insert(v).second) v = d.dart_vertex[d.twin[b1_of[v]]];
      if (visited.size() != boundary_vertices.size() ||
          v != boundary_vertices[0])
        issue("MalformedBoundary",
              "boundary arcs do not close into a single circle");
    }
  }
  if (!r.ok()) return r;  // face/region checks assume sane structure

  // Stage 3: faces.
  Faces f = compute_faces(d);
  const int nf = static_cast<int>(f.face_rep.size());
  int all_boundary_orbits = 0;
  for (int i = 0; i < nf; ++i) {
    bool all_b = true;
    for (int h = 0; h < n; ++h)
      if (f.face_of[h] == i && !d.boundary[h]) {
        all_b = false;
        break;
      }
    if (all_b) ++all_boundary_orbits;
    if (i != f.hole_face && f.face_dir[i] < 0)
      issue("DirectionInconsistent",
            "face " + std::to_string(f.face_rep[i]) + " mixes flow directions");
  }
  const bool saddled = d.surface == Surface::Disk && !d.boundary_periodic &&
                       !boundary_vertices.empty();
  if (saddled && (f.hole_face < 0 || all_boundary_orbits != 1))
    issue("MalformedBoundary", "expected exactly one all-boundary face orbit");
  if (!saddled && f.hole_face >= 0)
    issue("MalformedBoundary", "unexpected all-boundary face orbit");

  // Stage 4: per-component Euler characteristic (planarity of the embedding).
  auto [comp, ncomp] = dart_components(d);
  if (ncomp > 0) {
    std::vector<int> verts(ncomp, 0), edges(ncomp, 0);
    std::vector<std::set<int>> faces_in(ncomp);
    std::vector<char> vseen(nv, 0);
    for (int h = 0; h < n; ++h) {
      int c = comp[h];
      if (!vseen[d.dart_vertex[h]]) {
        vseen[d.dart_vertex[h]] = 1;
        verts[c]++;
      }
      if (h < d.twin[h]) edges[c]++;
      faces_in[c].insert(f.face_of[h]);
    }
    for (int c = 0; c < ncomp; ++c) {
      int chi = verts[c] - edges[c] + static_cast<int>(faces_in[c].size());
      if (chi != 2)
        issue("NonPlanar", "component " + std::to_string(c) +
                               " has Euler characteristic " +
                               std::to_string(chi));
    }
  }

  // Stage 5: Poincare-Hopf.
  {
    int sum2 = 2 * static_cast<int>(d.centers.size());
    for (const auto& k : d.vertex_kind) sum2 += index2_of(k);
    int chi2 = d.surface == Surface::Sphere ? 4 : 2;
    if (sum2 != chi2)
      issue("IndexSumMismatch", "2*index sum " + std::to_string(sum2) +
                                    " != " + std::to_string(chi2));
  }

  // Stage 6: regions (annulus structure of the complement).
  {
    std::vector<int> face_used(nf, 0);
    std::vector<int> center_used(d.centers.size(), 0);
    int circle_used = 0;
    bool ends_ok = true;
    auto check_end = [&](const RegionEnd& e) -> bool {
      switch (e.kind) {
        case RegionEnd::Face:
          if (e.id < 0 || e.id >= n || f.face_rep[f.face_of[e.id]] != e.id ||
              f.face_of[e.id] == f.hole_face) {
            issue("FaceContentViolation",
                  "region end is not a real face representative: " +
                      std::to_string(e.id));
            return false;
          }
          face_used[f.face_of[e.id]]++;
          return true;
        case RegionEnd::CenterEnd:
          if (e.id < 0 || e.id >= static_cast<int>(d.centers.size())) {
            issue("FaceContentViolation",
                  "region end names a missing center " + std::to_string(e.id));
            return false;
          }
          center_used[e.id]++;
          return true;
        case RegionEnd::CircleInside:
          if (!(d.surface == Surface::Disk && d.boundary_periodic)) {
            issue("FaceContentViolation",
                  "circle end without a periodic boundary circle");
            return false;
          }
          circle_used++;
          return true;
      }
      return false;
    };
    for (const auto& reg : d.regions) {
      ends_ok &= check_end(reg.a);
      ends_ok &= check_end(reg.b);
    }
    for (int i = 0; i < nf && ends_ok; ++i)
      if (i != f.hole_face && face_used[i] != 1)
        issue("FaceContentViolation",
              "face " + std::to_string(f.face_rep[i]) + " used " +
                  std::to_string(face_used[i]) + " times");
    for (size_t i = 0; i < center_used.size() && ends_ok; ++i)
      if (center_used[i] != 1)
        issue("FaceContentViolation",
              "center " + std::to_string(i) + " used " +
                  std::to_string(center_used[i]) + " times");
    if (ends_ok && d.surface == Surface::Disk && d.boundary_periodic &&
        circle_used != 1)
      issue("FaceContentViolation", "periodic circle inside used " +
                                        std::to_string(circle_used) + " times");
    if (ends_ok) {
      // Pair compatibility.
      auto w_of = [&](const RegionEnd& e) { return f.face_dir[f.face_of[e.id]]; };
      for (const auto& reg : d.regions) {
        const RegionEnd &a = reg.a, &b = reg.b;
        if (a.kind == RegionEnd::Face && b.kind == RegionEnd::Face) {
          if (w_of(a) == w_of(b))
            issue("FaceContentViolation",
                  "face-face annulus with aligned circulation");
        } else if ((a.kind == RegionEnd::Face && b.kind == RegionEnd::CenterEnd) ||
                   (b.kind == RegionEnd::Face && a.kind == RegionEnd::CenterEnd)) {
          const RegionEnd& fe = a.kind == RegionEnd::Face ? a : b;
          const RegionEnd& ce = a.kind == RegionEnd::Face ? b : a;
          if (d.centers[ce.id].rot != center_rot_for_face_dir(w_of(fe)))
            issue("FaceContentViolation",
                  "center rotation disagrees with its face circulation");
        } else if (a.kind == RegionEnd::CenterEnd &&
                   b.kind == RegionEnd::CenterEnd) {
          if (d.centers[a.id].rot == d.centers[b.id].rot)
            issue("FaceContentViolation",
                  "center-center annulus with equal rotations");
        }
        // Face-circle and center-circle pairs are unconstrained.
      }
      // Region graph must be a tree: components + centers + circle node.
      int nodes = ncomp + static_cast<int>(d.centers.size()) +
                  (d.surface == Surface::Disk && d.boundary_periodic ? 1 : 0);
      std::vector<int> parent(nodes);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      auto node_of = [&](const RegionEnd& e) {
        if (e.kind == RegionEnd::Face) return static_cast<int>(comp[e.id]);
        if (e.kind == RegionEnd::CenterEnd) return ncomp + e.id;
        return nodes - 1;
      };
      int merges = 0;
      for (const auto& reg : d.regions) {
        int x = find(node_of(reg.a)), y = find(node_of(reg.b));
        if (x == y) {
          issue("NonPlanar", "regions close a cycle in the region graph");
          break;
        }
        parent[x] = y;
        ++merges;
      }
      if (merges == static_cast<int>(d.regions.size()) &&
          static_cast<int>(d.regions.size()) != nodes - 1)
        issue("NonPlanar", "region graph is not connected");
    }
  }
  return r;
}

Diagram make_two_center_sphere() {
  Diagram d;
  d.surface = Surface::Sphere;
  d.centers = {{Rot::CCW}, {Rot::CW}};
  d.regions = {{{RegionEnd::CenterEnd, 0}, {RegionEnd::CenterEnd, 1}}};
  return d;
}

Diagram make_center_disk(Rot rot) {
  Diagram d;
  d.surface = Surface::Disk;
  d.boundary_periodic = true;
  d.centers = {{rot}};
  d.regions = {{{RegionEnd::CenterEnd, 0}, {RegionEnd::CircleInside, 0}}};
  return d;
}

int append_interior_star(Diagram& d, int two_k, bool first_out) {
  const int first = d.dart_count();
  const int deg = two_k + 2;
  const int v = d.vertex_count();
  d.vertex_kind.push_back({Placement::Interior, two_k});
  for (int i = 0; i < deg; ++i) {
    d.next.push_back(first + (i + 1) % deg);
    d.twin.push_back(-1);
    d.dart_vertex.push_back(v);
    d.out.push_back(static_cast<uint8_t>((i % 2 == 0) == first_out));
    d.boundary.push_back(0);
  }
  return first;
}

int append_boundary_fan(Diagram& d, int two_k, bool b1_out) {
  const int first = d.dart_count();
  const int deg = two_k + 2;
  const int v = d.vertex_count();
  d.vertex_kind.push_back({Placement::Boundary, two_k});
  for (int i = 0; i < deg; ++i) {
    d.next.push_back(first + (i + 1) % deg);
    d.twin.push_back(-1);
    d.dart_vertex.push_back(v);
    d.out.push_back(static_cast<uint8_t>((i % 2 == 0) == b1_out));
    d.boundary.push_back(static_cast<uint8_t>(i == 0 || i == deg - 1));
  }
  return first;
}

}  // namespace hamflow
