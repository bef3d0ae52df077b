#pragma once
// Simplicial homology of order complexes: integral (Smith normal form over
// checked 64-bit integers), rational ranks (Bareiss, used as an independent
// oracle), and GF(2).

#include <cstdint>
#include <string>
#include <vector>

#include "hamflow/homotopy.hpp"

namespace hamflow {

enum class Coefficients : uint8_t { Z, Q, Z2 };

struct HomologyGroup {
  int betti = 0;
  std::vector<int64_t> torsion;  // invariant factors > 1, ascending
};

struct HomologyResult {
  Coefficients coefficients = Coefficients::Z;
  std::vector<HomologyGroup> groups;  // index = dimension
};

// Boundary matrix from d-simplices to (d-1)-simplices, entries in {-1,0,1}.
std::vector<std::vector<int64_t>> boundary_matrix(const OrderComplex& k, int d);

// Smith normal form diagonal of an integer matrix (destructive helper
// exposed for testing).  Throws std::overflow_error on 64-bit overflow.
std::vector<int64_t> smith_diagonal(std::vector<std::vector<int64_t>> m);

// Rank over Q via fraction-free Bareiss elimination (128-bit intermediates).
int rank_q(std::vector<std::vector<int64_t>> m);
// Rank over GF(2).
int rank_z2(std::vector<std::vector<int64_t>> m);

HomologyResult homology(const OrderComplex& k, Coefficients c);

// True iff the homology is that of S^n (n >= 1): b_0 = 1, b_n = 1, every
// other group zero, no torsion anywhere.  Necessary-not-sufficient evidence
// for the weak homotopy type.
bool sphere_report(const HomologyResult& h, int n);

// "b=(1,0,0,1)" / "b=(1,0,0,1) torsion at 1: (2)" -- used in summaries.
std::string homology_brief(const HomologyResult& h);

}  // namespace hamflow
