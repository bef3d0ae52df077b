#include "hamflow/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hamflow {

namespace {

// Sentinels used inside codes.  Dart labels and kind codes are nonnegative,
// so negative values are unambiguous.
constexpr int32_t TOK_H = -2;   // hole face
constexpr int32_t TOK_U = -3;   // face consumed by the parent annulus
constexpr int32_t TOK_C = -4;   // center (followed by rotation bit)
constexpr int32_t TOK_N = -5;   // nested component (followed by its block)
constexpr int32_t TOK_SPH = -10;
constexpr int32_t TOK_DSK = -11;
constexpr int32_t TOK_DPC = -12;
constexpr int32_t TOK_SPH2C = -13;
constexpr int32_t TOK_DPC_CENTER = -14;

struct Encoder {
  const Diagram& d;
  Faces faces;
  std::vector<int32_t> comp;
  // face id -> (other end of its region), by kind/payload.
  struct Partner {
    enum { Unset, ToFace, ToCenter, ToCircle } kind = Unset;
    int face = -1;    // partner face id
    int center = -1;  // center index
  };
  std::vector<Partner> partner;

  explicit Encoder(const Diagram& dd) : d(dd) {
    faces = compute_faces(d);
    comp = dart_components(d).first;
    partner.assign(faces.face_rep.size(), {});
    auto note = [&](const RegionEnd& self, const RegionEnd& other) {
      if (self.kind != RegionEnd::Face) return;
      Partner& p = partner[faces.face_of[self.id]];
      switch (other.kind) {
        case RegionEnd::Face:
          p.kind = Partner::ToFace;
          p.face = faces.face_of[other.id];
          break;
        case RegionEnd::CenterEnd:
          p.kind = Partner::ToCenter;
          p.center = other.id;
          break;
        case RegionEnd::CircleInside:
          p.kind = Partner::ToCircle;
          break;
      }
    };
    for (const auto& r : d.regions) {
      note(r.a, r.b);
      note(r.b, r.a);
    }
  }

  // Lex-minimal encoding of the component containing `face`, over all start
  // darts on that face.
  Code encode_via_face(int face) const {
    Code best;
    for (int h = 0; h < d.dart_count(); ++h)
      if (faces.face_of[h] == face) {
        Code c = encode(h, face);
        if (best.empty() || c < best) best = std::move(c);
      }
    return best;
  }

  Code encode(int start, int parent_face) const {
    Code code;
    std::map<int, int> dart_label, vertex_label;
    std::vector<int> order;
    dart_label[start] = 0;
    order.push_back(start);
    for (size_t i = 0; i < order.size(); ++i) {
      int h = order[i];
      for (int nb : {d.next[h], d.twin[h]})
        if (!dart_label.count(nb)) {
          dart_label[nb] = static_cast<int>(order.size());
          order.push_back(nb);
        }
    }
    code.push_back(static_cast<int32_t>(order.size()));
    for (int h : order) {
      code.push_back(dart_label.at(d.next[h]));
      code.push_back(dart_label.at(d.twin[h]));
      code.push_back(d.out[h]);
      int v = d.dart_vertex[h];
      auto [it, fresh] = vertex_label.emplace(v, vertex_label.size());
      code.push_back(it->second);
      const SaddleKind& k = d.vertex_kind[v];
      code.push_back(fresh ? k.two_k * 2 +
                                 (k.placement == Placement::Boundary ? 1 : 0)
                           : -1);
      code.push_back(d.boundary[h]);
    }
    // Faces of this component, ordered by minimal dart label.
    std::map<int, int> face_min;  // face id -> min label
    for (int h : order) {
      int f = faces.face_of[h];
      auto [it, fresh] = face_min.emplace(f, dart_label.at(h));
      if (!fresh) it->second = std::min(it->second, dart_label.at(h));
    }
    std::vector<std::pair<int, int>> by_label;  // (min label, face id)
    for (auto [f, m] : face_min) by_label.emplace_back(m, f);
    std::sort(by_label.begin(), by_label.end());
    code.push_back(static_cast<int32_t>(by_label.size()));
    for (auto [m, f] : by_label) {
      code.push_back(m);
      if (f == faces.hole_face) {
        code.push_back(TOK_H);
      } else if (f == parent_face) {
        code.push_back(TOK_U);
      } else {
        const Partner& p = partner[f];
        if (p.kind == Partner::ToCenter) {
          code.push_back(TOK_C);
          code.push_back(d.centers[p.center].rot == Rot::CCW ? 1 : 0);
        } else if (p.kind == Partner::ToFace) {
          code.push_back(TOK_N);
          Code child = encode_via_face(p.face);
          code.insert(code.end(), child.begin(), child.end());
        } else if (p.kind == Partner::ToCircle) {
          code.push_back(TOK_U);
        } else {
          throw std::logic_error("encode: face without region content");
        }
      }
    }
    return code;
  }
};

}  // namespace

Code canonical_code(const Diagram& d) {
  if (d.vertex_count() == 0) {
    if (d.surface == Surface::Sphere) return {TOK_SPH2C};
    return {TOK_DPC_CENTER, d.centers.at(0).rot == Rot::CCW ? 1 : 0};
  }
  Encoder enc(d);
  Code best;
  auto consider = [&](int32_t tag, Code tail) {
    Code c;
    c.push_back(tag);
    c.insert(c.end(), tail.begin(), tail.end());
    if (best.empty() || c < best) best = std::move(c);
  };
  if (d.surface == Surface::Sphere) {
    for (int h = 0; h < d.dart_count(); ++h)
      consider(TOK_SPH, enc.encode(h, -1));
  } else if (!d.boundary_periodic) {
    // Root at the component carrying the boundary circle.
    int root_comp = -1;
    for (int h = 0; h < d.dart_count(); ++h)
      if (d.boundary[h]) {
        root_comp = enc.comp[h];
        break;
      }
    for (int h = 0; h < d.dart_count(); ++h)
      if (enc.comp[h] == root_comp) consider(TOK_DSK, enc.encode(h, -1));
  } else {
    // Periodic boundary with saddles: root at the face against the circle.
    int circle_face = -1;
    for (size_t f = 0; f < enc.partner.size(); ++f)
      if (enc.partner[f].kind == Encoder::Partner::ToCircle)
        circle_face = static_cast<int>(f);
    if (circle_face < 0)
      throw std::logic_error("canonical_code: periodic disk without circle face");
    consider(TOK_DPC, enc.encode_via_face(circle_face));
  }
  return best;
}

std::string code_hex(const Code& c) {
  uint64_t hash = 1469598103934665603ull;  // FNV-1a 64
  for (int32_t v : c) {
    uint32_t u = static_cast<uint32_t>(v);
    for (int i = 0; i < 4; ++i) {
      hash ^= (u >> (8 * i)) & 0xff;
      hash *= 1099511628211ull;
    }
  }
  static const char* hexd = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hexd[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

Diagram mirrored(const Diagram& d) {
  Diagram m = d;
  for (int h = 0; h < d.dart_count(); ++h) m.next[d.next[h]] = h;
  for (auto& c : m.centers) c.rot = c.rot == Rot::CW ? Rot::CCW : Rot::CW;
  if (d.dart_count()) {
    // A face orbit O of d maps to the orbit twin(O) of the mirror.
    Faces f = compute_faces(d);
    std::vector<int32_t> new_rep(f.face_rep.size(), INT32_MAX);
    for (int h = 0; h < d.dart_count(); ++h) {
      int32_t& r = new_rep[f.face_of[h]];
      r = std::min(r, d.twin[h]);
    }
    for (auto& reg : m.regions) {
      for (RegionEnd* e : {&reg.a, &reg.b})
        if (e->kind == RegionEnd::Face) e->id = new_rep[f.face_of[e->id]];
    }
  }
  return m;
}

Code canonical_code_mirror_merged(const Diagram& d) {
  return std::min(canonical_code(d), canonical_code(mirrored(d)));
}

Diagram relabeled(const Diagram& d, const std::vector<int32_t>& dart_perm,
                  const std::vector<int32_t>& vertex_perm) {
  Diagram r = d;
  for (int h = 0; h < d.dart_count(); ++h) {
    int g = dart_perm[h];
    r.next[g] = dart_perm[d.next[h]];
    r.twin[g] = dart_perm[d.twin[h]];
    r.dart_vertex[g] = vertex_perm[d.dart_vertex[h]];
    r.out[g] = d.out[h];
    r.boundary[g] = d.boundary[h];
  }
  for (int v = 0; v < d.vertex_count(); ++v)
    r.vertex_kind[vertex_perm[v]] = d.vertex_kind[v];
  if (d.dart_count()) {
    Faces f = compute_faces(d);
    std::vector<int32_t> new_rep(f.face_rep.size(), INT32_MAX);
    for (int h = 0; h < d.dart_count(); ++h) {
      int32_t& m = new_rep[f.face_of[h]];
      m = std::min(m, dart_perm[h]);
    }
    for (auto& reg : r.regions)
      for (RegionEnd* e : {&reg.a, &reg.b})
        if (e->kind == RegionEnd::Face) e->id = new_rep[f.face_of[e->id]];
  }
  return r;
}

namespace {

struct Matcher {
  const Diagram &a, &b;
  Faces fa, fb;
  std::vector<int32_t> ca, cb;
  int na_comp = 0, nb_comp = 0;
  std::vector<std::vector<int>> a_darts, b_darts;  // component -> darts
  std::vector<int> mapping;                        // a-dart -> b-dart

  Matcher(const Diagram& aa, const Diagram& bb) : a(aa), b(bb) {
    fa = compute_faces(a);
    fb = compute_faces(b);
    auto [camap, nca] = dart_components(a);
    auto [cbmap, ncb] = dart_components(b);
    ca = camap;
    cb = cbmap;
    na_comp = nca;
    nb_comp = ncb;
    a_darts.resize(nca);
    b_darts.resize(ncb);
    for (int h = 0; h < a.dart_count(); ++h) a_darts[ca[h]].push_back(h);
    for (int h = 0; h < b.dart_count(); ++h) b_darts[cb[h]].push_back(h);
  }

  // Propagate the dart bijection generated by seeding a0 -> b0.
  bool grow(int a0, int b0, std::vector<int>& amap,
            std::vector<int>& vmap) const {
    std::vector<std::pair<int, int>> stack{{a0, b0}};
    while (!stack.empty()) {
      auto [x, y] = stack.back();
      stack.pop_back();
      if (amap[x] >= 0) {
        if (amap[x] != y) return false;
        continue;
      }
      amap[x] = y;
      if (a.out[x] != b.out[y] || a.boundary[x] != b.boundary[y]) return false;
      int va = a.dart_vertex[x], vb = b.dart_vertex[y];
      if (vmap[va] >= 0) {
        if (vmap[va] != vb) return false;
      } else {
        if (!(a.vertex_kind[va] == b.vertex_kind[vb])) return false;
        vmap[va] = vb;
      }
      stack.push_back({a.next[x], b.next[y]});
      stack.push_back({a.twin[x], b.twin[y]});
    }
    return true;
  }

  bool regions_match(const std::vector<int>& amap) const {
    using Key = std::pair<std::pair<int, int>, std::pair<int, int>>;
    auto end_key = [&](const RegionEnd& e, bool from_a) -> std::pair<int, int> {
      switch (e.kind) {
        case RegionEnd::Face: {
          int rep = from_a ? fb.face_rep[fb.face_of[amap[e.id]]]
                           : fb.face_rep[fb.face_of[e.id]];
          return {0, rep};
        }
        case RegionEnd::CenterEnd: {
          const auto& cs = from_a ? a.centers : b.centers;
          return {1, cs[e.id].rot == Rot::CCW ? 1 : 0};
        }
        case RegionEnd::CircleInside:
          return {2, 0};
      }
      return {3, 0};
    };
    auto keys = [&](const Diagram& d, bool from_a) {
      std::multiset<Key> out;
      for (const auto& r : d.regions) {
        auto ka = end_key(r.a, from_a), kb = end_key(r.b, from_a);
        out.insert({std::min(ka, kb), std::max(ka, kb)});
      }
      return out;
    };
    return keys(a, true) == keys(b, false);
  }

  bool assign(size_t ai, std::vector<int>& comp_map, std::vector<char>& used,
              std::vector<int>& amap, std::vector<int>& vmap) const {
    if (ai == a_darts.size()) return regions_match(amap);
    for (int bj = 0; bj < nb_comp; ++bj) {
      if (used[bj] || b_darts[bj].size() != a_darts[ai].size()) continue;
      int a0 = a_darts[ai].front();
      for (int b0 : b_darts[bj]) {
        std::vector<int> amap2 = amap, vmap2 = vmap;
        if (!grow(a0, b0, amap2, vmap2)) continue;
        used[bj] = 1;
        comp_map[ai] = bj;
        if (assign(ai + 1, comp_map, used, amap2, vmap2)) {
          amap = amap2;
          vmap = vmap2;
          return true;
        }
        used[bj] = 0;
        comp_map[ai] = -1;
      }
    }
    return false;
  }
};

}  // namespace

bool equivalent_bruteforce(const Diagram& a, const Diagram& b) {
  if (a.surface != b.surface || a.boundary_periodic != b.boundary_periodic)
    return false;
  if (a.dart_count() != b.dart_count() ||
      a.vertex_count() != b.vertex_count() ||
      a.centers.size() != b.centers.size() ||
      a.regions.size() != b.regions.size())
    return false;
  auto rots = [](const Diagram& d) {
    int cw = 0;
    for (const auto& c : d.centers)
      if (c.rot == Rot::CW) ++cw;
    return cw;
  };
  if (rots(a) != rots(b)) return false;
  auto kinds = [](const Diagram& d) {
    auto v = d.vertex_kind;
    std::sort(v.begin(), v.end());
    return v;
  };
  if (kinds(a) != kinds(b)) return false;
  if (a.vertex_count() == 0) return true;  // saddle-free: invariants suffice

  Matcher m(a, b);
  if (m.na_comp != m.nb_comp) return false;
  std::vector<int> comp_map(m.na_comp, -1), amap(a.dart_count(), -1),
      vmap(a.vertex_count(), -1);
  std::vector<char> used(m.nb_comp, 0);
  return m.assign(0, comp_map, used, amap, vmap);
}

}  // namespace hamflow
