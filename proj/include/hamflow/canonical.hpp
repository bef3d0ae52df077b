#pragma once
// Canonical forms for diagrams up to orientation-preserving equivalence.
// The code is a lex-minimal integer sequence obtained by rooting the region
// tree, BFS-labelling darts of each component, and recursing through the
// annuli; two diagrams are equivalent iff their codes agree.

#include <cstdint>
#include <string>
#include <vector>

#include "hamflow/diagram.hpp"

namespace hamflow {

using Code = std::vector<int32_t>;

// Canonical code of a (valid) diagram.
Code canonical_code(const Diagram& d);

// Hex rendering used as the stable class id in reports.
std::string code_hex(const Code& c);

// Mirror image: reverses the orientation of the ambient surface.  Swaps CW
// and CCW centers and inverts all rotations.
Diagram mirrored(const Diagram& d);

// min(code(d), code(mirrored(d))) — class id under mirror merging.
Code canonical_code_mirror_merged(const Diagram& d);

// Brute-force equivalence test (factorial in component size; tests only).
bool equivalent_bruteforce(const Diagram& a, const Diagram& b);

// Relabel darts/vertices by a permutation; used by property tests.
Diagram relabeled(const Diagram& d, const std::vector<int32_t>& dart_perm,
                  const std::vector<int32_t>& vertex_perm);

}  // namespace hamflow
