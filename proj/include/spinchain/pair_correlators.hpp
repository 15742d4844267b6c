#pragma once

#include <cmath>

#include "spinchain/errors.hpp"

namespace spinchain {

// Two-spin observables of a parity-symmetric state, the inputs of the
// correlator concurrence formula. All values are real in every state this
// library produces (real Hamiltonians, real eigenvectors).
//
// Naming note: sp_sp is the pair coherence <s_+^i s_+^j> = <dndn|rho|upup>
// (it feeds the parallel branch against p), sp_sm is the hopping coherence
// <s_+^i s_-^j> = <updn|rho|dnup> (antiparallel branch against q).
struct PairCorrelators {
  double sp_sp = 0.0;  // <s_+^i s_+^j>
  double sp_sm = 0.0;  // <s_+^i s_-^j>
  double szsz = 0.0;   // <s_z^i s_z^j>
  double sz_i = 0.0;   // <s_z^i>
  double sz_j = 0.0;   // <s_z^j>

  double p() const { return 0.25 - szsz; }

  // q = sqrt((1/2 - p)^2 - <s_z>^2), the geometric mean of the up-up and
  // down-down populations. Squares within -1e-12 of zero clamp to 0; more
  // negative ones signal inconsistent correlators.
  double q() const {
    const double szbar = 0.5 * (sz_i + sz_j);
    const double q2 = (0.25 + szsz) * (0.25 + szsz) - szbar * szbar;
    if (q2 < -1e-12) throw NegativeDiscriminant("q^2 = " + std::to_string(q2));
    return q2 > 0.0 ? std::sqrt(q2) : 0.0;
  }
};

}  // namespace spinchain
