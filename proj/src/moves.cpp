#include "hamflow/moves.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "hamflow/canonical.hpp"

namespace hamflow {

namespace {

std::vector<int32_t> prev_array(const Diagram& d) {
  std::vector<int32_t> prev(d.next.size());
  for (int h = 0; h < d.dart_count(); ++h) prev[d.next[h]] = h;
  return prev;
}

// b1 germ (first fan dart) of every boundary vertex, -1 elsewhere.
std::vector<int> b1_darts(const Diagram& d) {
  std::vector<int> b1(d.vertex_count(), -1);
  for (int h = 0; h < d.dart_count(); ++h)
    if (d.boundary[h] && d.boundary[d.next[h]]) b1[d.dart_vertex[h]] = d.next[h];
  return b1;
}

// ---------------------------------------------------------------------------
// The value-shift move.  S is a set of saddles inside one connection whose
// level value is perturbed to one side; every separatrix between S and the
// rest breaks and the free ends reconnect along the perturbed level.
// Returns nothing when a structural guard fails; callers over-generate and
// filter by validity and codimension drop anyway.
std::optional<Diagram> lift_subset(const Diagram& d,
                                   const std::vector<char>& in_S,
                                   SplitSide side) {
  const int n = d.dart_count();
  const bool above = side == SplitSide::Above;
  auto prev = prev_array(d);
  auto at_S = [&](int h) { return in_S[d.dart_vertex[h]] != 0; };

  std::vector<int> s_out, rest_out;  // broken out-germs on each side
  for (int h = 0; h < n; ++h)
    if (d.out[h] && at_S(h) != at_S(d.twin[h]))
      (at_S(h) ? s_out : rest_out).push_back(h);
  const bool any_broken = !s_out.empty() || !rest_out.empty();

  Diagram nd = d;
  auto set_twin = [&](int x, int y) {
    nd.twin[x] = y;
    nd.twin[y] = x;
  };
  if (any_broken) {
    for (int g : s_out) {
      // Walk the rest side of the broken level until it re-enters S.
      int t = d.twin[g], steps = 0;
      while (!at_S(t)) {
        t = d.twin[above ? d.next[t] : prev[t]];
        if (++steps > n) return std::nullopt;
      }
      set_twin(g, t);
    }
    for (int h : rest_out) {
      // Walk straight through the lifted saddles to the matching free end.
      int g = d.twin[h], steps = 0;
      for (;;) {
        int p = above ? prev[g] : d.next[g];
        if (!at_S(d.twin[p])) {
          set_twin(h, d.twin[p]);
          break;
        }
        g = d.twin[p];
        if (++steps > n) return std::nullopt;
      }
    }
    for (int h = 0; h < n; ++h)
      if (nd.twin[nd.twin[h]] != h || nd.twin[h] == h) return std::nullopt;
  }

  // Lifted boundary saddles leave the circle.
  bool lifted_boundary = false, boundary_left = false;
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (d.vertex_kind[v].placement != Placement::Boundary) continue;
    if (!in_S[v]) {
      boundary_left = true;
      continue;
    }
    lifted_boundary = true;
    if (d.vertex_kind[v].two_k % 2) return std::nullopt;  // half-odd pins
    nd.vertex_kind[v].placement = Placement::Interior;
  }
  if (lifted_boundary)
    for (int h = 0; h < n; ++h)
      if (d.boundary[h] && in_S[d.dart_vertex[h]]) nd.boundary[h] = 0;
  const bool full_lift = lifted_boundary && !boundary_left;
  if (full_lift) nd.boundary_periodic = true;

  // Region contents follow the perturbed level.
  Faces fo = compute_faces(d);
  Faces fn = compute_faces(nd);
  auto orbit_rep = [&](const std::vector<int>& darts) -> std::optional<int> {
    if (darts.empty()) return std::nullopt;
    int f = fn.face_of[darts[0]];
    for (int h : darts)
      if (fn.face_of[h] != f) return std::nullopt;
    if (f == fn.hole_face) return std::nullopt;
    return fn.face_rep[f];
  };
  std::vector<std::vector<int>> old_face_darts(fo.face_rep.size());
  for (int h = 0; h < n; ++h) old_face_darts[fo.face_of[h]].push_back(h);

  for (auto& reg : nd.regions) {
    for (RegionEnd* e : {&reg.a, &reg.b}) {
      if (e->kind != RegionEnd::Face) continue;
      int f = fo.face_of[e->id];
      std::vector<int> s_darts, rest_darts;
      bool touched = false;
      for (int h : old_face_darts[f]) {
        (at_S(h) ? s_darts : rest_darts).push_back(h);
        if (nd.twin[h] != d.twin[h]) touched = true;
      }
      touched |= !s_darts.empty();
      if (!touched) {
        e->id = fn.face_rep[fn.face_of[e->id]];
        continue;
      }
      bool keep_rest = above ? fo.face_dir[f] == 1 : fo.face_dir[f] == 0;
      const std::vector<int>& bulk = keep_rest
                                         ? (rest_darts.empty() ? s_darts : rest_darts)
                                         : (s_darts.empty() ? rest_darts : s_darts);
      auto rep = orbit_rep(bulk);
      if (!rep) return std::nullopt;
      e->id = *rep;
    }
  }
  if (any_broken) {
    // The perturbation opens one fresh annulus along the broken level.
    std::vector<int> e1, e2;
    if (above) {
      e1 = s_out;
      for (int g : s_out) e2.push_back(d.twin[g]);
    } else {
      for (int h : rest_out) e1.push_back(d.twin[h]);
      e2 = rest_out;
    }
    auto r1 = orbit_rep(e1), r2 = orbit_rep(e2);
    if (!r1 || !r2) return std::nullopt;
    nd.regions.push_back(
        {{RegionEnd::Face, *r1}, {RegionEnd::Face, *r2}});
  }
  if (full_lift) {
    // The freed circle becomes periodic; the old hole turns into its annulus.
    auto rep = orbit_rep(old_face_darts[fo.hole_face]);
    if (!rep) return std::nullopt;
    nd.regions.push_back({{RegionEnd::Face, *rep}, {RegionEnd::CircleInside, 0}});
  }
  return nd;
}

// All lift candidates for one subset mask of one connection's vertices.
void lift_candidates(const Diagram& d, const std::vector<int>& verts,
                     unsigned mask, bool conn_has_boundary,
                     const std::vector<int>& b1,
                     std::vector<Diagram>& out) {
  std::vector<char> in_S(d.vertex_count(), 0);
  bool all = true, forced_set = false;
  SplitSide forced{};
  for (size_t i = 0; i < verts.size(); ++i) {
    if (!(mask >> i & 1u)) {
      all = false;
      continue;
    }
    int v = verts[i];
    in_S[v] = 1;
    if (d.vertex_kind[v].placement == Placement::Boundary) {
      if (d.vertex_kind[v].two_k % 2) return;  // half-odd weights stay pinned
      SplitSide s = d.out[b1[v]] ? SplitSide::Below : SplitSide::Above;
      if (forced_set && s != forced) return;
      forced = s;
      forced_set = true;
    }
  }
  if (all && !conn_has_boundary) return;  // shifting everything moves nothing
  if (forced_set) {
    if (auto nd = lift_subset(d, in_S, forced)) out.push_back(std::move(*nd));
  } else {
    for (SplitSide s : {SplitSide::Above, SplitSide::Below})
      if (auto nd = lift_subset(d, in_S, s)) out.push_back(std::move(*nd));
  }
}

// ---------------------------------------------------------------------------
// Whitehead splits.

// Full rotation cycle at v starting from its smallest dart.
std::vector<int> star_of(const Diagram& d, int v) {
  int start = -1;
  for (int h = 0; h < d.dart_count(); ++h)
    if (d.dart_vertex[h] == v) {
      start = h;
      break;
    }
  std::vector<int> s;
  int cur = start;
  do {
    s.push_back(cur);
    cur = d.next[cur];
  } while (cur != start);
  return s;
}

void whitehead_interior_at(const Diagram& d, int v, std::vector<Diagram>& out) {
  const SaddleKind k = d.vertex_kind[v];
  if (k.placement != Placement::Interior || k.two_k < 4) return;
  std::vector<int> s = star_of(d, v);
  const int deg = static_cast<int>(s.size());
  for (int r = 0; r < deg; ++r) {
    for (int a = 3; a <= deg - 3; a += 2) {
      Diagram nd = d;
      const int e1 = nd.dart_count(), e2 = e1 + 1;
      const int v2 = nd.vertex_count();
      auto at = [&](int i) { return s[(r + i) % deg]; };
      nd.vertex_kind[v] = {Placement::Interior, a - 1};
      nd.vertex_kind.push_back({Placement::Interior, deg - a - 1});
      nd.next.insert(nd.next.end(), {0, 0});
      nd.twin.insert(nd.twin.end(), {e2, e1});
      nd.dart_vertex.insert(nd.dart_vertex.end(), {v, v2});
      nd.out.insert(nd.out.end(),
                    {static_cast<uint8_t>(!d.out[at(0)]),
                     static_cast<uint8_t>(!d.out[at(a)])});
      nd.boundary.insert(nd.boundary.end(), {0, 0});
      nd.next[at(a - 1)] = e1;
      nd.next[e1] = at(0);
      nd.next[at(deg - 1)] = e2;
      nd.next[e2] = at(a);
      for (int i = a; i < deg; ++i) nd.dart_vertex[at(i)] = v2;
      out.push_back(std::move(nd));
    }
  }
}

void whitehead_boundary_at(const Diagram& d, int v, std::vector<Diagram>& out) {
  const SaddleKind k = d.vertex_kind[v];
  if (k.placement != Placement::Boundary) return;
  const int T = k.two_k;
  // Fan f_0 = b1, ..., f_{T+1} = b2.
  std::vector<int> b1 = b1_darts(d);
  std::vector<int> f;
  {
    int cur = b1[v];
    do {
      f.push_back(cur);
      cur = d.next[cur];
    } while (cur != b1[v]);
  }
  // Split along the boundary into a pair of boundary saddles.
  for (int c = 1; c <= T - 1; ++c) {
    Diagram nd = d;
    const int x = nd.dart_count(), y = x + 1;  // new b2 of v, new b1 of v2
    const int v2 = nd.vertex_count();
    nd.vertex_kind[v] = {Placement::Boundary, c};
    nd.vertex_kind.push_back({Placement::Boundary, T - c});
    nd.next.insert(nd.next.end(), {f[0], f[c + 1]});
    nd.twin.insert(nd.twin.end(), {y, x});
    nd.dart_vertex.insert(nd.dart_vertex.end(), {v, v2});
    nd.out.insert(nd.out.end(), {static_cast<uint8_t>(!d.out[f[c]]),
                                 static_cast<uint8_t>(d.out[f[c]])});
    nd.boundary.insert(nd.boundary.end(), {1, 1});
    nd.next[f[c]] = x;
    nd.next[f[T + 1]] = y;
    for (int i = c + 1; i <= T + 1; ++i) nd.dart_vertex[f[i]] = v2;
    out.push_back(std::move(nd));
  }
  // Peel a consecutive run of interior germs off into an interior saddle.
  for (int two_j = 2; two_j <= T - 1; two_j += 2) {
    const int L = two_j + 1;
    for (int i = 1; i + L - 1 <= T; ++i) {
      Diagram nd = d;
      const int ev = nd.dart_count(), eu = ev + 1;
      const int u = nd.vertex_count();
      nd.vertex_kind[v] = {Placement::Boundary, T - two_j};
      nd.vertex_kind.push_back({Placement::Interior, two_j});
      nd.next.insert(nd.next.end(), {f[i + L], f[i]});
      nd.twin.insert(nd.twin.end(), {eu, ev});
      nd.dart_vertex.insert(nd.dart_vertex.end(), {v, u});
      nd.out.insert(nd.out.end(), {d.out[f[i]], static_cast<uint8_t>(!d.out[f[i]])});
      nd.boundary.insert(nd.boundary.end(), {0, 0});
      nd.next[f[i - 1]] = ev;
      nd.next[f[i + L - 1]] = eu;
      for (int j = i; j < i + L; ++j) nd.dart_vertex[f[j]] = u;
      out.push_back(std::move(nd));
    }
  }
}

// Keep exactly the valid one-step degenerations, canonically deduplicated.
std::vector<Diagram> finalize(const Diagram& d, std::vector<Diagram> cands) {
  const int want = codim_diagram(d) - 1;
  std::map<Code, Diagram> uniq;
  for (auto& c : cands) {
    if (!validate_diagram(c).ok()) continue;
    if (codim_diagram(c) != want) continue;
    uniq.emplace(canonical_code(c), std::move(c));
  }
  std::vector<Diagram> out;
  out.reserve(uniq.size());
  for (auto& [code, diag] : uniq) out.push_back(std::move(diag));
  return out;
}

std::vector<Diagram> all_lifts(const Diagram& d) {
  std::vector<Diagram> cands;
  std::vector<int> b1 = b1_darts(d);
  for (const Connection& c : connections(d)) {
    const size_t m = c.vertices.size();
    const bool has_b = c.boundary_circles > 0;
    for (unsigned mask = 1; mask < (1u << m); ++mask)
      lift_candidates(d, c.vertices, mask, has_b, b1, cands);
  }
  return cands;
}

}  // namespace

std::vector<Diagram> whitehead_interior(const Diagram& d, int v) {
  std::vector<Diagram> cands;
  whitehead_interior_at(d, v, cands);
  return finalize(d, std::move(cands));
}

std::vector<Diagram> whitehead_boundary(const Diagram& d, int v) {
  std::vector<Diagram> cands;
  whitehead_boundary_at(d, v, cands);
  return finalize(d, std::move(cands));
}

std::vector<Diagram> value_split(const Diagram& d, int x) {
  std::vector<Diagram> cands;
  std::vector<int> b1 = b1_darts(d);
  for (const Connection& c : connections(d)) {
    auto it = std::find(c.vertices.begin(), c.vertices.end(), x);
    if (it == c.vertices.end()) continue;
    unsigned mask = 1u << (it - c.vertices.begin());
    lift_candidates(d, c.vertices, mask, c.boundary_circles > 0, b1, cands);
  }
  return finalize(d, std::move(cands));
}

std::vector<Diagram> unpinch(const Diagram& d, int v) {
  if (d.vertex_kind[v].placement != Placement::Boundary) return {};
  return value_split(d, v);
}

std::vector<Diagram> unpinch_all(const Diagram& d) {
  std::vector<Diagram> cands;
  std::vector<int> b1 = b1_darts(d);
  for (const Connection& c : connections(d)) {
    if (c.boundary_circles == 0) continue;
    lift_candidates(d, c.vertices, (1u << c.vertices.size()) - 1, true, b1,
                    cands);
  }
  return finalize(d, std::move(cands));
}

std::vector<Diagram> boundary_separation(const Diagram&) {
  // Requires at least two boundary circles; unreachable while p <= 1.
  return {};
}

std::vector<Diagram> covers(const Diagram& d) {
  std::vector<Diagram> cands = all_lifts(d);
  for (int v = 0; v < d.vertex_count(); ++v) {
    whitehead_interior_at(d, v, cands);
    whitehead_boundary_at(d, v, cands);
  }
  for (Diagram& s : boundary_separation(d)) cands.push_back(std::move(s));
  return finalize(d, std::move(cands));
}

}  // namespace hamflow
