#pragma once

#include <Eigen/Dense>
#include <string>

#include "spinchain/pair_correlators.hpp"

namespace spinchain {

// Which coherence carries the entanglement: parallel means Bell type
// |upup>+|dndn| (pair branch), antiparallel |updn>+|dnup> (hopping branch).
// At most one branch can be positive in any physical state.
enum class PairKind { parallel, antiparallel, zero, unclassified };

const char* pair_kind_label(PairKind k);

struct ConcurrenceValue {
  double value = 0.0;
  PairKind kind = PairKind::zero;
};

// Reduced two-spin density matrix in the product basis
// {|dn dn>, |dn up>, |up dn>, |up up>} (site i is the left factor).
struct TwoSpinState {
  Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();

  double trace() const { return rho.trace(); }
  // True when rho commutes with the two-spin parity exp[i pi (s_z^i+s_z^j+1)],
  // i.e. the only coherences are dndn<->upup and dnup<->updn.
  bool parity_symmetric(double tol = 1e-10) const;
  void validate(double tol = 1e-9) const;  // trace 1, Hermitian, PSD
};

PairCorrelators correlators_from_state(const TwoSpinState& state);

// X-state reconstruction from parity-symmetric correlators (exact for every
// state generated by the models in this repository).
TwoSpinState state_from_correlators(const PairCorrelators& c);

// Concurrence of a parity-symmetric pair from its correlators:
// C = 2 max(|sp_sp| - p, |sp_sm| - q, 0).
ConcurrenceValue concurrence_from_correlators(const PairCorrelators& c);

// Wootters construction: C = max(0, sqrt(l1)-sqrt(l2)-sqrt(l3)-sqrt(l4)) with
// l_i the descending eigenvalues of rho * (sy x sy) rho^* (sy x sy), computed
// through the Hermitian form sqrt(rho) rho~ sqrt(rho). The branch kind is
// classified from the correlators when the state is parity symmetric and
// reported as unclassified otherwise.
ConcurrenceValue wootters_concurrence(const TwoSpinState& state);

// Partial trace of a pure state over all sites except i and j (0-based,
// i < j, bit i of a basis index = 1 means spin i up).
TwoSpinState reduced_two_spin(const Eigen::VectorXd& amplitudes, int n, int site_i, int site_j);

}  // namespace spinchain
