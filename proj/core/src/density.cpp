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


#include "frobinc/density.hpp"

#include <iomanip>
#include <sstream>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "frobinc/error.hpp"

namespace frobinc {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

Real to_real(const Int& v) { return Real(v.get_str()); }

// log(zeta(m) 2^{1-m} / V_m) with V_m = pi^{m/2} / Gamma(m/2 + 1).
Real log_mh(int m) {
  const Real half_m = Real(m) / 2;
  const Real zeta = boost::math::zeta(Real(m));
  const Real log_volume = half_m * log(boost::math::constants::pi<Real>()) - boost::math::lgamma(half_m + 1);
  return log(zeta) + Real(1 - m) * log(Real(2)) - log_volume;
}

std::string render(const Real& v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace

DensityReport density_report(int rank, const Int& disc, const Int& min_norm, int digits) {
  if (rank < 1) throw DomainError("density needs a positive rank");
  if (disc <= 0 || min_norm <= 0) throw DomainError("density needs a positive discriminant and minimal norm");
  DensityReport out;
  out.rank = rank;
  out.disc = disc;
  out.min_norm = min_norm;
  const Real log_delta = -log(to_real(disc)) / 2 + Real(rank) / 2 * log(to_real(min_norm) / 4);
  const Real log_bound = log_mh(rank);
  out.delta = render(exp(log_delta), digits);
  out.mh_bound = render(exp(log_bound), digits);
  out.log2_delta = static_cast<double>(log_delta / log(Real(2)));
  out.log2_mh_bound = static_cast<double>(log_bound / log(Real(2)));
  return out;
}

double log2_mh_bound(int m) {
  if (m < 2) throw DomainError("the Minkowski-Hlawka bound needs rank >= 2");
  return static_cast<double>(log_mh(m) / log(Real(2)));
}

std::string mh_bound(int m, int digits) {
  if (m < 2) throw DomainError("the Minkowski-Hlawka bound needs rank >= 2");
  return render(exp(log_mh(m)), digits);
}

}  // namespace frobinc
