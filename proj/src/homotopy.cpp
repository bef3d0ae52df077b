#include "hamflow/homotopy.hpp"

#include <algorithm>
#include <functional>

namespace hamflow {

namespace {

// Strict part of the relation restricted away from i itself.
bool has_max(const FinitePoset& p, const std::vector<int>& set) {
  for (int m : set) {
    bool top = true;
    for (int j : set)
      if (!p.le(j, m)) {
        top = false;
        break;
      }
    if (top) return true;
  }
  return false;
}

bool has_min(const FinitePoset& p, const std::vector<int>& set) {
  for (int m : set) {
    bool bot = true;
    for (int j : set)
      if (!p.le(m, j)) {
        bot = false;
        break;
      }
    if (bot) return true;
  }
  return false;
}

}  // namespace

bool is_down_beat(const FinitePoset& p, int i) {
  std::vector<int> below;
  for (int j = 0; j < p.n; ++j)
    if (j != i && p.le(j, i)) below.push_back(j);
  return !below.empty() && has_max(p, below);
}

bool is_up_beat(const FinitePoset& p, int i) {
  std::vector<int> above;
  for (int j = 0; j < p.n; ++j)
    if (j != i && p.le(i, j)) above.push_back(j);
  return !above.empty() && has_min(p, above);
}

bool is_beat_point(const FinitePoset& p, int i) {
  return is_down_beat(p, i) || is_up_beat(p, i);
}

std::pair<std::vector<int>, std::vector<int>> beat_points(
    const FinitePoset& p) {
  std::pair<std::vector<int>, std::vector<int>> out;
  for (int i = 0; i < p.n; ++i) {
    if (is_down_beat(p, i)) out.first.push_back(i);
    if (is_up_beat(p, i)) out.second.push_back(i);
  }
  return out;
}

FinitePoset induced(const FinitePoset& p, const std::vector<int>& pts) {
  FinitePoset q;
  q.n = static_cast<int>(pts.size());
  q.leq.assign(q.n, std::vector<uint8_t>(q.n, 0));
  for (int a = 0; a < q.n; ++a)
    for (int b = 0; b < q.n; ++b)
      q.leq[a][b] = p.leq[pts[a]][pts[b]];
  return q;
}

std::vector<int> core(const FinitePoset& p) {
  std::vector<int> alive(p.n);
  for (int i = 0; i < p.n; ++i) alive[i] = i;
  for (;;) {
    FinitePoset q = induced(p, alive);
    int victim = -1;
    for (int i = 0; i < q.n; ++i)
      if (is_beat_point(q, i)) {
        victim = i;
        break;
      }
    if (victim < 0) return alive;
    alive.erase(alive.begin() + victim);
  }
}

bool is_contractible(const FinitePoset& p) { return core(p).size() == 1; }

OrderComplex order_complex(const FinitePoset& p) {
  OrderComplex oc;
  std::vector<int> chain;
  std::function<void(int)> extend = [&](int last) {
    const int d = static_cast<int>(chain.size()) - 1;
    if (static_cast<int>(oc.simplices.size()) <= d) oc.simplices.resize(d + 1);
    std::vector<int> s = chain;
    std::sort(s.begin(), s.end());
    oc.simplices[d].push_back(std::move(s));
    for (int w = 0; w < p.n; ++w) {
      if (w == last || !p.le(last, w)) continue;
      chain.push_back(w);
      extend(w);
      chain.pop_back();
    }
  };
  for (int v = 0; v < p.n; ++v) {
    chain = {v};
    extend(v);
  }
  for (auto& level : oc.simplices) std::sort(level.begin(), level.end());
  return oc;
}

}  // namespace hamflow
