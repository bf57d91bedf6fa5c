#pragma once

#include <array>

#include "geodiam/diameter.hpp"
#include "geodiam/space.hpp"

namespace geodiam {

// Two triangular rooms joined only through an injected distance table, with
// five corner pairs tight at one interior pair. The four obstacles that would
// realize the table are declared, not modelled.
struct FivePathInstance {
  RoomSpace space;
  DistanceTable table;
  EquationSystem system;  // the five tight pairs, case II
  Point cu, cv;           // room circumcenters
  double L = 0.0;
  std::array<int, 3> u, v;  // corner ids: apex, base left, base right
};

// mirrored swaps which base corners are paired across the rooms.
FivePathInstance five_path_instance(double L = 10.0, bool mirrored = false, const ToleranceConfig& tol = {});

}  // namespace geodiam
