#include "hamflow/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "hamflow/moves.hpp"

namespace hamflow {

namespace {

// Partitions of `budget` into non-increasing even parts >= 2.
void interior_partitions(int budget, int max_part, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (budget == 0) {
    out.push_back(cur);
    return;
  }
  int start = std::min(budget, max_part);
  if (start % 2) --start;
  for (int p = start; p >= 2; p -= 2) {
    cur.push_back(p);
    interior_partitions(budget - p, p, cur, out);
    cur.pop_back();
  }
}

// Partitions of `budget` into non-increasing parts >= 1 with an even number
// of odd parts (the circle phase has to close up).
void boundary_partitions(int budget, int max_part, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (budget == 0) {
    int odd = 0;
    for (int p : cur) odd += p & 1;
    if (odd % 2 == 0) out.push_back(cur);
    return;
  }
  for (int p = std::min(budget, max_part); p >= 1; --p) {
    cur.push_back(p);
    boundary_partitions(budget - p, p, cur, out);
    cur.pop_back();
  }
}

bool planar_components(const Diagram& d) {
  auto [comp, nc] = dart_components(d);
  Faces f = compute_faces(d);
  std::vector<int> V(nc, 0), E2(nc, 0), F(nc, 0);
  std::vector<char> seen(d.vertex_count(), 0);
  for (int h = 0; h < d.dart_count(); ++h) {
    E2[comp[h]]++;
    if (!seen[d.dart_vertex[h]]) {
      seen[d.dart_vertex[h]] = 1;
      V[comp[h]]++;
    }
  }
  for (size_t i = 0; i < f.face_rep.size(); ++i)
    F[comp[f.face_rep[i]]]++;
  for (int c = 0; c < nc; ++c)
    if (V[c] - E2[c] / 2 + F[c] != 2) return false;
  return true;
}

// Fills a planar skeleton with centers and glues its components into one
// region tree, emitting every complete assignment.
class Assembler {
 public:
  Assembler(const Diagram& skel, int cw, int ccw, std::vector<Diagram>& sink)
      : d_(skel), faces_(compute_faces(skel)), cw_(cw), ccw_(ccw),
        sink_(sink) {
    auto [comp, nc] = dart_components(skel);
    comp_of_ = std::move(comp);
    ncomp_ = nc;
    placed_.assign(ncomp_, 0);
    comp_faces_.assign(ncomp_, {});
    for (size_t f = 0; f < faces_.face_rep.size(); ++f) {
      if (static_cast<int>(f) == faces_.hole_face) continue;
      comp_faces_[comp_of_[faces_.face_rep[f]]].push_back(static_cast<int>(f));
    }
  }

  void run() {
    if (d_.surface == Surface::Disk && d_.boundary_periodic) {
      // Root is the bare circle: one w-free slot.
      if (ccw_ > 0) {
        --ccw_;
        centers_.push_back({Rot::CCW});
        regions_.push_back({{RegionEnd::CenterEnd, 0}, {RegionEnd::CircleInside, 0}});
        fill(0);
        regions_.pop_back();
        centers_.pop_back();
        ++ccw_;
      }
      if (cw_ > 0) {
        --cw_;
        centers_.push_back({Rot::CW});
        regions_.push_back({{RegionEnd::CenterEnd, 0}, {RegionEnd::CircleInside, 0}});
        fill(0);
        regions_.pop_back();
        centers_.pop_back();
        ++cw_;
      }
      for (int c = 0; c < ncomp_; ++c)
        for (size_t gi = 0; gi < comp_faces_[c].size(); ++gi) {
          int g = comp_faces_[c][gi];
          placed_[c] = 1;
          regions_.push_back({{RegionEnd::Face, faces_.face_rep[g]},
                              {RegionEnd::CircleInside, 0}});
          for (int g2 : comp_faces_[c])
            if (g2 != g) slots_.push_back(g2);
          fill(0);
          slots_.clear();
          regions_.pop_back();
          placed_[c] = 0;
        }
    } else {
      // Root component: the boundary circle's on the disk, dart 0's on the
      // sphere (any node of the tree works as a root).
      int root = comp_of_[0];
      placed_[root] = 1;
      slots_ = comp_faces_[root];
      fill(0);
    }
  }

 private:
  void fill(size_t idx) {
    if (idx == slots_.size()) {
      if (cw_ == 0 && ccw_ == 0 &&
          std::find(placed_.begin(), placed_.end(), 0) == placed_.end())
        emit();
      return;
    }
    const int f = slots_[idx];
    const int w = faces_.face_dir[f];
    const int rep = faces_.face_rep[f];
    int& pool = w == 1 ? ccw_ : cw_;
    if (pool > 0) {
      --pool;
      centers_.push_back({w == 1 ? Rot::CCW : Rot::CW});
      regions_.push_back({{RegionEnd::Face, rep},
                          {RegionEnd::CenterEnd,
                           static_cast<int>(centers_.size()) - 1}});
      fill(idx + 1);
      regions_.pop_back();
      centers_.pop_back();
      ++pool;
    }
    for (int c = 0; c < ncomp_; ++c) {
      if (placed_[c]) continue;
      for (int g : comp_faces_[c]) {
        if (faces_.face_dir[g] == w) continue;  // annuli anti-align
        placed_[c] = 1;
        regions_.push_back({{RegionEnd::Face, rep},
                            {RegionEnd::Face, faces_.face_rep[g]}});
        const size_t mark = slots_.size();
        for (int g2 : comp_faces_[c])
          if (g2 != g) slots_.push_back(g2);
        fill(idx + 1);
        slots_.resize(mark);
        regions_.pop_back();
        placed_[c] = 0;
      }
    }
  }

  void emit() {
    Diagram out = d_;
    out.centers = centers_;
    out.regions = regions_;
    if (validate_diagram(out).ok()) sink_.push_back(std::move(out));
  }

  Diagram d_;
  Faces faces_;
  int cw_, ccw_;
  std::vector<Diagram>& sink_;
  std::vector<int32_t> comp_of_;
  int ncomp_ = 0;
  std::vector<char> placed_;
  std::vector<std::vector<int>> comp_faces_;
  std::vector<int> slots_;
  std::vector<Center> centers_;
  std::vector<Region> regions_;
};

// Skeleton for one circular boundary order (with phase) and interior saddle
// list; twins of interior germs left open.
Diagram make_skeleton(Surface surface, const std::vector<int>& boundary_order,
                      bool first_b1_out, const std::vector<int>& interior) {
  Diagram d;
  d.surface = surface;
  std::vector<int> b1s, b2s;
  bool phase = first_b1_out;
  for (size_t j = 0; j < boundary_order.size(); ++j) {
    if (j > 0) phase ^= (boundary_order[j] & 1) != 0;
    int first = append_boundary_fan(d, boundary_order[j], phase);
    b1s.push_back(first);
    b2s.push_back(first + boundary_order[j] + 1);
  }
  const int m = static_cast<int>(boundary_order.size());
  for (int j = 0; j < m; ++j) {
    int k = (j + 1) % m;
    d.twin[b1s[j]] = b2s[k];
    d.twin[b2s[k]] = b1s[j];
  }
  if (surface == Surface::Disk && m == 0) d.boundary_periodic = true;
  for (int two_k : interior) append_interior_star(d, two_k, /*first_out=*/true);
  return d;
}

void for_each_matching(const Diagram& skel,
                       const std::function<void(const Diagram&)>& cb) {
  std::vector<int> outs, ins;
  for (int h = 0; h < skel.dart_count(); ++h) {
    if (skel.twin[h] != -1) continue;
    (skel.out[h] ? outs : ins).push_back(h);
  }
  if (outs.size() != ins.size()) return;
  std::sort(ins.begin(), ins.end());
  do {
    Diagram d = skel;
    for (size_t i = 0; i < outs.size(); ++i) {
      d.twin[outs[i]] = ins[i];
      d.twin[ins[i]] = outs[i];
    }
    if (planar_components(d)) cb(d);
  } while (std::next_permutation(ins.begin(), ins.end()));
}

}  // namespace

int center_limit() {
  if (const char* e = std::getenv("HAMFLOW_CENTER_LIMIT")) {
    int v = std::atoi(e);
    if (v > 0) return v;
  }
  return 4;
}

Atlas enumerate_classes(const EnumRequest& req) {
  if (req.centers_cw < 0 || req.centers_ccw < 0)
    throw std::invalid_argument("center counts must be non-negative");
  const int total_centers = req.centers_cw + req.centers_ccw;
  if (total_centers > center_limit())
    throw LimitExceeded("requested " + std::to_string(total_centers) +
                        " centers; limit is " + std::to_string(center_limit()) +
                        " (raise HAMFLOW_CENTER_LIMIT)");

  Atlas atlas;
  atlas.request = req;
  const bool disk = req.surface == Surface::Disk;
  const int budget = 2 * total_centers - (disk ? 2 : 4);

  std::vector<Diagram> raw;
  if (budget == 0) {
    // Saddle-free flows.
    if (!disk && req.centers_cw == 1 && req.centers_ccw == 1)
      raw.push_back(make_two_center_sphere());
    if (disk && total_centers == 1)
      raw.push_back(make_center_disk(req.centers_cw ? Rot::CW : Rot::CCW));
  } else if (budget > 0) {
    for (int ib = budget; ib >= 0; ib -= 2) {
      std::vector<std::vector<int>> interiors, boundaries;
      std::vector<int> cur;
      interior_partitions(ib, budget, cur, interiors);
      if (disk)
        boundary_partitions(budget - ib, budget, cur, boundaries);
      else if (ib == budget)
        boundaries.push_back({});
      for (const auto& il : interiors) {
        for (const auto& bl : boundaries) {
          int min_codim = 0;
          for (int k : il) min_codim += k - 2;
          for (int k : bl) min_codim += k - 1;
          if (req.max_codim >= 0 && min_codim > req.max_codim) continue;
          auto handle = [&](const Diagram& d) {
            Assembler(d, req.centers_cw, req.centers_ccw, raw).run();
          };
          if (bl.empty()) {
            for_each_matching(make_skeleton(req.surface, {}, false, il),
                              handle);
          } else {
            std::vector<int> order = bl;
            std::sort(order.begin(), order.end());
            do {
              for (int phase = 0; phase < 2; ++phase)
                for_each_matching(
                    make_skeleton(req.surface, order, phase != 0, il), handle);
            } while (std::next_permutation(order.begin(), order.end()));
          }
        }
      }
    }
  }

  std::map<Code, EnumClass> uniq;
  for (Diagram& d : raw) {
    int codim = codim_diagram(d);
    if (req.max_codim >= 0 && codim > req.max_codim) continue;
    Code code =
        req.merge_mirrors ? canonical_code_mirror_merged(d) : canonical_code(d);
    if (uniq.count(code)) continue;
    uniq.emplace(std::move(code), EnumClass{std::move(d), {}, codim});
  }
  for (auto& [code, cls] : uniq) {
    cls.code = code;
    atlas.classes.push_back(std::move(cls));
  }
  std::sort(atlas.classes.begin(), atlas.classes.end(),
            [](const EnumClass& a, const EnumClass& b) {
              return std::tie(a.codim, a.code) < std::tie(b.codim, b.code);
            });
  std::set<std::string> hexes;
  for (const EnumClass& c : atlas.classes)
    if (!hexes.insert(code_hex(c.code)).second)
      throw std::logic_error("canonical code hash collision");
  return atlas;
}

std::vector<std::string> closure_check(const Atlas& atlas) {
  std::vector<std::string> issues;
  std::map<Code, const EnumClass*> index;
  for (const EnumClass& c : atlas.classes) index[c.code] = &c;
  for (const EnumClass& c : atlas.classes) {
    std::vector<Diagram> cov = covers(c.diagram);
    if (c.codim > 0 && cov.empty())
      issues.push_back("class " + code_hex(c.code) + " (codim " +
                       std::to_string(c.codim) + ") admits no perturbation");
    for (const Diagram& e : cov) {
      Code k = atlas.request.merge_mirrors ? canonical_code_mirror_merged(e)
                                           : canonical_code(e);
      auto it = index.find(k);
      if (it == index.end()) {
        issues.push_back("cover " + code_hex(k) + " of class " +
                         code_hex(c.code) + " is missing from the atlas");
      } else if (it->second->codim != c.codim - 1) {
        issues.push_back("cover " + code_hex(k) + " of class " +
                         code_hex(c.code) + " has codim " +
                         std::to_string(it->second->codim) + ", expected " +
                         std::to_string(c.codim - 1));
      }
    }
  }
  return issues;
}

}  // namespace hamflow
