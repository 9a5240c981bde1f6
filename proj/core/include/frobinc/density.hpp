/*
   Copyright 2026 The frobinc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#pragma once

// Normalized center density of a lattice packing and the Minkowski-Hlawka
// bound, evaluated in 50-digit binary floating point.

#include <string>

#include "frobinc/bigint.hpp"

namespace frobinc {

struct DensityReport {
  int rank = 0;
  Int disc;
  Int min_norm;
  /// Decimal renderings at full working precision.
  std::string delta;
  std::string mh_bound;
  double log2_delta = 0;
  double log2_mh_bound = 0;
  /// log2(delta) - log2(mh_bound).
  double log2_ratio() const { return log2_delta - log2_mh_bound; }
};

/// delta = disc^{-1/2} (min_norm/4)^{rank/2}, together with the
/// Minkowski-Hlawka bound at the same rank. `digits` controls the decimal
/// output only.
DensityReport density_report(int rank, const Int& disc, const Int& min_norm, int digits = 20);

/// log2 of zeta(m) 2^{1-m} / V_m, V_m the volume of the unit m-ball.
double log2_mh_bound(int m);
/// Decimal value of the bound.
std::string mh_bound(int m, int digits = 20);

}  // namespace frobinc
