#pragma once

#include <vector>

#include "tot/angle_core.hpp"
#include "tot/torus.hpp"

namespace tot {

/// Full type report for a point of T.
struct Classification {
  TorusPoint point;
  OrientationSign orientation = OrientationSign::Zero;
  bool degenerate = false;
  /// Flags of the similarity class; for degenerate points every preimage agrees.
  TypeFlags flags;
  std::vector<AngleTriple> preimages;
  std::vector<LocusId> loci;
  int multiplicity = 1;
  TorusPoint canonical;
};

Classification classify(const TorusPoint& p);

}  // namespace tot
