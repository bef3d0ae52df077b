#pragma once
// Perturbation moves.  Each move takes a diagram of codimension c and yields
// diagrams of codimension c-1 (covers in the degeneration poset).  All
// generators over-produce candidates; covers() validates, filters by the
// codimension drop, and deduplicates canonically.

#include <vector>

#include "hamflow/diagram.hpp"

namespace hamflow {

enum class SplitSide : uint8_t { Above, Below };

// Whitehead move at an interior k-saddle (k >= 2): break it into an l-saddle
// and a (k-l)-saddle joined by one new separatrix.  Emits all (l, cut) choices.
std::vector<Diagram> whitehead_interior(const Diagram& d, int v);

// Whitehead move at a boundary saddle: split into two boundary saddles
// joined along the boundary, or peel off an interior saddle.
std::vector<Diagram> whitehead_boundary(const Diagram& d, int v);

// Break a multi-saddle connection at an interior saddle x by perturbing its
// level value to one side.
std::vector<Diagram> value_split(const Diagram& d, int x);

// Unpinch one boundary k-saddle with k a positive integer: detach it from the
// boundary into an interior k-saddle.  The perturbation side is forced by the
// local flow direction.  Empty when k is half-odd.
std::vector<Diagram> unpinch(const Diagram& d, int v);

// Unpinch every saddle of the boundary circle simultaneously (possible only
// when all weights are integral); the boundary becomes periodic.
std::vector<Diagram> unpinch_all(const Diagram& d);

// Boundary separation (multi-circle surfaces).  Not reachable for p <= 1;
// retained as an explicit extension point.
std::vector<Diagram> boundary_separation(const Diagram& d);

// All covers of d: validated, codim(d)-1 only, canonically deduplicated,
// sorted by canonical code.
std::vector<Diagram> covers(const Diagram& d);

}  // namespace hamflow
