#pragma once

#include "lagsob/poly.hpp"
#include "lagsob/sobolev.hpp"

#include <cstddef>
#include <vector>

namespace lagsob {

/// Reference values for alpha = 3, m = 3, M = [[1,1,0],[1,1,0],[0,0,1]],
/// S = 1, entered as printed (factored forms multiplied out at load time).
struct WorkedExample {
  SobolevSpec spec;
  Poly S;
  std::vector<Poly> R;
  Poly omega;
  Poly PS;
  std::vector<Poly> Mh;
  std::size_t order = 0;
  long awr = 0;
  std::vector<long> nj;
  std::vector<long> mj;
};

const WorkedExample& worked_example();

}  // namespace lagsob
