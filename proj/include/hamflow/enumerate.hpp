#pragma once
// Enumeration of equivalence classes of diagrams with a prescribed number of
// CW/CCW centers on a given surface, stratified by codimension.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamflow/canonical.hpp"
#include "hamflow/diagram.hpp"

namespace hamflow {

struct EnumRequest {
  Surface surface = Surface::Disk;
  int centers_cw = 1;    // i_-
  int centers_ccw = 2;   // i_+
  int max_codim = -1;    // -1 = all strata
  bool merge_mirrors = false;
};

struct EnumClass {
  Diagram diagram;
  Code code;
  int codim = 0;
};

struct Atlas {
  EnumRequest request;
  std::vector<EnumClass> classes;  // sorted by (codim, code)
};

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Upper bound on total centers accepted without HAMFLOW_CENTER_LIMIT.
int center_limit();

Atlas enumerate_classes(const EnumRequest& req);

// Verify that covers() stays inside the atlas and reaches codim-1: for every
// class c with codim > 0 its covers exist in the atlas at codim(c)-1, and
// every non-maximal class is covered by something.  Returns human-readable
// problems (empty = clean).
std::vector<std::string> closure_check(const Atlas& atlas);

}  // namespace hamflow
