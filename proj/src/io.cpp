#include "hamflow/io.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "hamflow/canonical.hpp"
#include "hamflow/homotopy.hpp"
#include "hamflow/moves.hpp"
#include "json.hpp"

namespace hamflow {

namespace {

using json = nlohmann::ordered_json;

const char* surface_name(Surface s) {
  return s == Surface::Sphere ? "sphere" : "disk";
}

const char* placement_name(Placement p) {
  return p == Placement::Interior ? "interior" : "boundary";
}

const char* rot_name(Rot r) { return r == Rot::CW ? "cw" : "ccw"; }

const char* kind_name(RegionEnd::Kind k) {
  switch (k) {
    case RegionEnd::Face: return "face";
    case RegionEnd::CenterEnd: return "center";
    default: return "circle";
  }
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer())
    throw SchemaError(std::string("field \"") + key + "\" is not an integer");
  return v.get<int>();
}

std::string str_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string())
    throw SchemaError(std::string("field \"") + key + "\" is not a string");
  return v.get<std::string>();
}

bool bool_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_boolean())
    throw SchemaError(std::string("field \"") + key + "\" is not a boolean");
  return v.get<bool>();
}

template <typename T>
std::vector<T> int_array(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array())
    throw SchemaError(std::string("field \"") + key + "\" is not an array");
  std::vector<T> out;
  for (const json& e : v) {
    if (!e.is_number_integer())
      throw SchemaError(std::string("field \"") + key + "\" has a non-integer entry");
    out.push_back(static_cast<T>(e.get<int64_t>()));
  }
  return out;
}

json end_to_json(const RegionEnd& e) {
  return json{{"kind", kind_name(e.kind)}, {"id", e.id}};
}

RegionEnd end_from_json(const json& j) {
  RegionEnd e;
  std::string k = str_field(j, "kind");
  if (k == "face")
    e.kind = RegionEnd::Face;
  else if (k == "center")
    e.kind = RegionEnd::CenterEnd;
  else if (k == "circle")
    e.kind = RegionEnd::CircleInside;
  else
    throw SchemaError("unknown region end kind \"" + k + "\"");
  e.id = int_field(j, "id");
  return e;
}

json diagram_to_json(const Diagram& d) {
  json j;
  j["surface"] = surface_name(d.surface);
  json verts = json::array();
  for (const SaddleKind& k : d.vertex_kind)
    verts.push_back(json{{"placement", placement_name(k.placement)},
                         {"two_k", k.two_k}});
  j["vertices"] = std::move(verts);
  j["next"] = d.next;
  j["twin"] = d.twin;
  j["dart_vertex"] = d.dart_vertex;
  j["out"] = d.out;
  j["boundary"] = d.boundary;
  j["boundary_periodic"] = d.boundary_periodic;
  json cents = json::array();
  for (const Center& c : d.centers) cents.push_back(rot_name(c.rot));
  j["centers"] = std::move(cents);
  json regs = json::array();
  for (const Region& r : d.regions)
    regs.push_back(json::array({end_to_json(r.a), end_to_json(r.b)}));
  j["regions"] = std::move(regs);
  return j;
}

Diagram diagram_from_json(const json& j) {
  Diagram d;
  std::string surf = str_field(j, "surface");
  if (surf == "sphere")
    d.surface = Surface::Sphere;
  else if (surf == "disk")
    d.surface = Surface::Disk;
  else
    throw SchemaError("unknown surface \"" + surf + "\"");

  const json& verts = field(j, "vertices");
  if (!verts.is_array()) throw SchemaError("field \"vertices\" is not an array");
  for (const json& v : verts) {
    SaddleKind k;
    std::string p = str_field(v, "placement");
    if (p == "interior")
      k.placement = Placement::Interior;
    else if (p == "boundary")
      k.placement = Placement::Boundary;
    else
      throw SchemaError("unknown placement \"" + p + "\"");
    k.two_k = int_field(v, "two_k");
    d.vertex_kind.push_back(k);
  }

  d.next = int_array<int32_t>(j, "next");
  d.twin = int_array<int32_t>(j, "twin");
  d.dart_vertex = int_array<int32_t>(j, "dart_vertex");
  d.out = int_array<uint8_t>(j, "out");
  d.boundary = int_array<uint8_t>(j, "boundary");
  size_t n = d.next.size();
  if (d.twin.size() != n || d.dart_vertex.size() != n || d.out.size() != n ||
      d.boundary.size() != n)
    throw SchemaError("dart arrays have mismatched lengths");
  d.boundary_periodic = bool_field(j, "boundary_periodic");

  const json& cents = field(j, "centers");
  if (!cents.is_array()) throw SchemaError("field \"centers\" is not an array");
  for (const json& c : cents) {
    if (!c.is_string()) throw SchemaError("center entry is not a string");
    std::string r = c.get<std::string>();
    if (r == "cw")
      d.centers.push_back({Rot::CW});
    else if (r == "ccw")
      d.centers.push_back({Rot::CCW});
    else
      throw SchemaError("unknown center rotation \"" + r + "\"");
  }

  const json& regs = field(j, "regions");
  if (!regs.is_array()) throw SchemaError("field \"regions\" is not an array");
  for (const json& r : regs) {
    if (!r.is_array() || r.size() != 2)
      throw SchemaError("region entry is not an end pair");
    d.regions.push_back({end_from_json(r[0]), end_from_json(r[1])});
  }

  ValidationReport rep = validate_diagram(d);
  if (!rep.ok()) throw SchemaError("invalid diagram: " + rep.summary());
  return d;
}

json census_to_json(const Census& c, Surface surf) {
  json j;
  j["centers_cw"] = c.centers_cw;
  j["centers_ccw"] = c.centers_ccw;
  json sad = json::array();
  for (const CensusEntry& e : c.saddles)
    sad.push_back(json{{"placement", placement_name(e.placement)},
                       {"two_k", e.two_k},
                       {"count", e.count}});
  j["saddles"] = std::move(sad);
  if (surf == Surface::Disk)
    j["boundary"] =
        c.boundary == Census::Boundary::Periodic ? "periodic" : "saddled";
  return j;
}

json atlas_to_json(const Atlas& a) {
  json j;
  j["request"] = json{{"surface", surface_name(a.request.surface)},
                      {"centers_cw", a.request.centers_cw},
                      {"centers_ccw", a.request.centers_ccw},
                      {"max_codim", a.request.max_codim},
                      {"merge_mirrors", a.request.merge_mirrors}};
  json classes = json::array();
  for (const EnumClass& c : a.classes) {
    json e;
    e["id"] = code_hex(c.code);
    e["codim"] = c.codim;
    e["census"] = census_to_json(census_of(c.diagram), a.request.surface);
    e["diagram"] = diagram_to_json(c.diagram);
    classes.push_back(std::move(e));
  }
  j["classes"] = std::move(classes);
  return j;
}

json homology_to_json(const HomologyResult& h) {
  json j;
  json betti = json::array();
  for (const HomologyGroup& g : h.groups) betti.push_back(g.betti);
  j["betti"] = std::move(betti);
  json tor = json::array();
  for (size_t d = 0; d < h.groups.size(); ++d)
    if (!h.groups[d].torsion.empty())
      tor.push_back(json{{"dim", d}, {"factors", h.groups[d].torsion}});
  j["torsion"] = std::move(tor);
  return j;
}

json poset_to_json(const FinitePoset& p, const Atlas& a) {
  json j;
  json nodes = json::array();
  for (int i = 0; i < p.n; ++i)
    nodes.push_back(json{{"id", code_hex(a.classes[i].code)},
                         {"codim", a.classes[i].codim}});
  j["nodes"] = std::move(nodes);
  json covers = json::array();
  for (auto [lo, hi] : p.cover_pairs())
    covers.push_back(json::array(
        {code_hex(a.classes[lo].code), code_hex(a.classes[hi].code)}));
  j["covers"] = std::move(covers);
  return j;
}

const char* coeff_name(Coefficients c) {
  switch (c) {
    case Coefficients::Z: return "z";
    case Coefficients::Q: return "q";
    default: return "z2";
  }
}

}  // namespace

std::string atlas_json(const Atlas& atlas) {
  return atlas_to_json(atlas).dump(2) + "\n";
}

Atlas atlas_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("top level is not an object");

  Atlas a;
  const json& req = field(j, "request");
  std::string surf = str_field(req, "surface");
  if (surf == "sphere")
    a.request.surface = Surface::Sphere;
  else if (surf == "disk")
    a.request.surface = Surface::Disk;
  else
    throw SchemaError("unknown surface \"" + surf + "\"");
  a.request.centers_cw = int_field(req, "centers_cw");
  a.request.centers_ccw = int_field(req, "centers_ccw");
  a.request.max_codim = int_field(req, "max_codim");
  a.request.merge_mirrors = bool_field(req, "merge_mirrors");

  const json& classes = field(j, "classes");
  if (!classes.is_array()) throw SchemaError("field \"classes\" is not an array");
  for (const json& c : classes) {
    EnumClass e;
    e.diagram = diagram_from_json(field(c, "diagram"));
    if (e.diagram.surface != a.request.surface)
      throw SchemaError("class surface disagrees with request");
    e.codim = int_field(c, "codim");
    if (e.codim != codim_diagram(e.diagram))
      throw SchemaError("stored codim disagrees with the diagram");
    e.code = a.request.merge_mirrors ? canonical_code_mirror_merged(e.diagram)
                                     : canonical_code(e.diagram);
    if (code_hex(e.code) != str_field(c, "id"))
      throw SchemaError("stored id disagrees with the canonical code");
    a.classes.push_back(std::move(e));
  }
  std::sort(a.classes.begin(), a.classes.end(),
            [](const EnumClass& x, const EnumClass& y) {
              return std::tie(x.codim, x.code) < std::tie(y.codim, y.code);
            });
  return a;
}

AnalysisReport analyze_atlas(const Atlas& atlas, Coefficients c) {
  AnalysisReport r;
  r.atlas = atlas;
  r.coefficients = c;
  r.poset = build_poset(atlas);
  const FinitePoset& p = r.poset;

  std::vector<int> comp(p.n, -1);
  int ncomp = 0;
  for (int s = 0; s < p.n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack = {s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int k = 0; k < p.n; ++k)
        if (comp[k] < 0 && (p.le(i, k) || p.le(k, i))) {
          comp[k] = ncomp;
          stack.push_back(k);
        }
    }
    ++ncomp;
  }

  for (int ci = 0; ci < ncomp; ++ci) {
    ComponentReport cr;
    for (int i = 0; i < p.n; ++i)
      if (comp[i] == ci) cr.members.push_back(i);
    FinitePoset sub = induced(p, cr.members);
    std::vector<int> local_core = core(sub);
    for (int li : local_core) cr.core_points.push_back(cr.members[li]);
    cr.contractible = local_core.size() == 1;
    cr.core_homology = homology(order_complex(induced(sub, local_core)), c);
    cr.full_homology = homology(order_complex(sub), c);
    for (int n = 1; n < static_cast<int>(cr.core_homology.groups.size()); ++n)
      if (sphere_report(cr.core_homology, n)) {
        cr.sphere_match = n;
        break;
      }
    r.components.push_back(std::move(cr));
  }
  return r;
}

std::string report_json(const AnalysisReport& r) {
  json j;
  j["atlas"] = atlas_to_json(r.atlas);
  j["poset"] = poset_to_json(r.poset, r.atlas);
  j["coefficients"] = coeff_name(r.coefficients);
  json comps = json::array();
  for (const ComponentReport& c : r.components) {
    json e;
    e["members"] = c.members;
    e["core_points"] = c.core_points;
    e["contractible"] = c.contractible;
    e["core_homology"] = homology_to_json(c.core_homology);
    e["full_homology"] = homology_to_json(c.full_homology);
    e["sphere_match"] = c.sphere_match;
    comps.push_back(std::move(e));
  }
  j["components"] = std::move(comps);
  return j.dump(2) + "\n";
}

}  // namespace hamflow
