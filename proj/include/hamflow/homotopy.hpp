#pragma once
// Homotopy theory of finite posets: beat points, cores, order complexes.

#include <vector>

#include "hamflow/poset.hpp"

namespace hamflow {

// i is a down-beat point if {j < i} has a maximum; up-beat dually.
bool is_down_beat(const FinitePoset& p, int i);
bool is_up_beat(const FinitePoset& p, int i);
bool is_beat_point(const FinitePoset& p, int i);

// All beat points of p: (down list, up list), each ascending.
std::pair<std::vector<int>, std::vector<int>> beat_points(const FinitePoset& p);

// Remove beat points until none remain.  Returns the surviving original
// indices (ascending).  Deterministic: always removes the lowest-index beat
// point first.  The result is unique up to isomorphism regardless of order.
std::vector<int> core(const FinitePoset& p);

// Restriction of p to a subset of its points (order inherited).
FinitePoset induced(const FinitePoset& p, const std::vector<int>& pts);

bool is_contractible(const FinitePoset& p);  // core is a single point

// Order complex: all nonempty chains, as sorted vertex lists grouped by
// dimension.  simplices[d] lists the d-simplices.
struct OrderComplex {
  std::vector<std::vector<std::vector<int>>> simplices;
  int dim() const { return static_cast<int>(simplices.size()) - 1; }
};
OrderComplex order_complex(const FinitePoset& p);

}  // namespace hamflow
