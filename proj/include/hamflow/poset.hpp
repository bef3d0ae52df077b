#pragma once
// Finite posets: the degeneration order on an atlas plus generic machinery
// shared with the homotopy module.

#include <cstdint>
#include <string>
#include <vector>

#include "hamflow/enumerate.hpp"

namespace hamflow {

// Finite poset on {0..n-1} given by its relation matrix (reflexive closure of
// a partial order).  leq[i][j] == true means i <= j.
struct FinitePoset {
  int n = 0;
  std::vector<std::vector<uint8_t>> leq;

  bool le(int i, int j) const { return leq[i][j] != 0; }
  std::vector<std::pair<int, int>> cover_pairs() const;  // (lower, upper)
  std::vector<int> downset(int i) const;                 // {j : j <= i}
  std::vector<int> upset(int i) const;                   // {j : j >= i}
  int components() const;  // connected components of comparability
  ValidationReport validate() const;  // reflexive, antisymmetric, transitive
};

// Build the degeneration poset of an atlas: x <= y iff x lies in the closure
// of y's stratum (reachable from y by cover moves).  Index i refers to
// atlas.classes[i].
FinitePoset build_poset(const Atlas& atlas);

// Hasse diagram in DOT.  Default edge direction upper -> lower (toward the
// degenerate class); paper_orientation flips the arrows.
std::string hasse_dot(const FinitePoset& p, const std::vector<std::string>& labels,
                      bool paper_orientation);

// Parse hasse_dot output back into cover pairs (round-trip testing).
std::vector<std::pair<int, int>> parse_hasse_dot(
    const std::string& dot, const std::vector<std::string>& labels);

}  // namespace hamflow
