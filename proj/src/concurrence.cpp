#include "spinchain/concurrence.hpp"

#include <algorithm>
#include <cmath>

namespace spinchain {

namespace {

constexpr double kZeroTol = 1e-12;

Eigen::Matrix4d spin_flip_matrix() {
  // sigma_y x sigma_y in the {dndn, dnup, updn, upup} basis; real since it
  // only ever multiplies real densities here.
  Eigen::Matrix4d f = Eigen::Matrix4d::Zero();
  f(0, 3) = -1.0;
  f(1, 2) = 1.0;
  f(2, 1) = 1.0;
  f(3, 0) = -1.0;
  return f;
}

PairKind classify(const PairCorrelators& c, double value) {
  if (value < kZeroTol) return PairKind::zero;
  const double parallel = std::abs(c.sp_sp) - c.p();
  const double antiparallel = std::abs(c.sp_sm) - c.q();
  return parallel >= antiparallel ? PairKind::parallel : PairKind::antiparallel;
}

}  // namespace

const char* pair_kind_label(PairKind k) {
  switch (k) {
    case PairKind::parallel: return "parallel";
    case PairKind::antiparallel: return "antiparallel";
    case PairKind::zero: return "zero";
    case PairKind::unclassified: return "unclassified";
  }
  return "?";
}

bool TwoSpinState::parity_symmetric(double tol) const {
  // Forbidden coherences connect states of different two-spin parity:
  // any element linking {dndn, upup} with {dnup, updn}.
  for (int a : {0, 3}) {
    for (int b : {1, 2}) {
      if (std::abs(rho(a, b)) > tol || std::abs(rho(b, a)) > tol) return false;
    }
  }
  return true;
}

void TwoSpinState::validate(double tol) const {
  if (std::abs(rho.trace() - 1.0) > tol) {
    throw NotADensityMatrix("trace = " + std::to_string(rho.trace()));
  }
  if ((rho - rho.transpose()).cwiseAbs().maxCoeff() > tol) {
    throw NotADensityMatrix("not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < -1e-12) {
    throw NotADensityMatrix("negative eigenvalue " + std::to_string(es.eigenvalues()(0)));
  }
}

PairCorrelators correlators_from_state(const TwoSpinState& s) {
  PairCorrelators c;
  const Eigen::Matrix4d& r = s.rho;
  c.sp_sp = r(0, 3);  // <dndn|rho|upup>
  c.sp_sm = r(1, 2);  // <dnup|rho|updn>
  c.szsz = 0.25 * (r(0, 0) - r(1, 1) - r(2, 2) + r(3, 3));
  c.sz_i = 0.5 * (r(2, 2) + r(3, 3) - r(0, 0) - r(1, 1));
  c.sz_j = 0.5 * (r(1, 1) + r(3, 3) - r(0, 0) - r(2, 2));
  return c;
}

TwoSpinState state_from_correlators(const PairCorrelators& c) {
  TwoSpinState s;
  const double szbar = 0.5 * (c.sz_i + c.sz_j);
  const double szdiff = 0.5 * (c.sz_i - c.sz_j);
  s.rho(0, 0) = 0.25 + c.szsz - szbar;
  s.rho(1, 1) = 0.25 - c.szsz - szdiff;
  s.rho(2, 2) = 0.25 - c.szsz + szdiff;
  s.rho(3, 3) = 0.25 + c.szsz + szbar;
  s.rho(0, 3) = s.rho(3, 0) = c.sp_sp;
  s.rho(1, 2) = s.rho(2, 1) = c.sp_sm;
  return s;
}

ConcurrenceValue concurrence_from_correlators(const PairCorrelators& c) {
  const double parallel = std::abs(c.sp_sp) - c.p();
  const double antiparallel = std::abs(c.sp_sm) - c.q();
  const double best = std::max(parallel, antiparallel);
  ConcurrenceValue out;
  out.value = best > 0.0 ? 2.0 * best : 0.0;
  if (out.value < kZeroTol) {
    out.value = 0.0;
    out.kind = PairKind::zero;
  } else {
    out.kind = parallel > antiparallel ? PairKind::parallel : PairKind::antiparallel;
  }
  return out;
}

ConcurrenceValue wootters_concurrence(const TwoSpinState& state) {
  state.validate();
  static const Eigen::Matrix4d flip = spin_flip_matrix();

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(state.rho);
  Eigen::Vector4d ev = es.eigenvalues().cwiseMax(0.0);
  const Eigen::Matrix4d sqrt_rho =
      es.eigenvectors() * ev.cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();

  const Eigen::Matrix4d rho_tilde = flip * state.rho * flip;  // rho real: rho^* = rho
  const Eigen::Matrix4d m = sqrt_rho * rho_tilde * sqrt_rho;

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> esm(m, Eigen::EigenvaluesOnly);
  Eigen::Vector4d lam = esm.eigenvalues().cwiseMax(0.0).cwiseSqrt();  // ascending
  const double value = lam(3) - lam(2) - lam(1) - lam(0);

  ConcurrenceValue out;
  out.value = std::max(value, 0.0);
  if (out.value < kZeroTol) {
    out.value = 0.0;
    out.kind = PairKind::zero;
  } else if (state.parity_symmetric()) {
    out.kind = classify(correlators_from_state(state), out.value);
  } else {
    out.kind = PairKind::unclassified;
  }
  return out;
}

TwoSpinState reduced_two_spin(const Eigen::VectorXd& amplitudes, int n, int site_i, int site_j) {
  if (n < 2 || n > 20) throw SizeTooLarge("reduced_two_spin supports 2 <= n <= 20");
  if (amplitudes.size() != (1L << n)) throw BadIndices("amplitude vector has wrong dimension");
  if (site_i < 0 || site_j <= site_i || site_j >= n) throw BadIndices("need 0 <= i < j < n");

  const uint64_t mask_i = 1ULL << site_i;
  const uint64_t mask_j = 1ULL << site_j;
  const uint64_t dim = 1ULL << n;

  // Gather amplitudes by environment configuration: column m of `a` holds the
  // amplitudes with (bit_i, bit_j) = (m>>1, m&1).
  TwoSpinState s;
  Eigen::Matrix4d acc = Eigen::Matrix4d::Zero();
  for (uint64_t x = 0; x < dim; x += 1) {
    if (x & (mask_i | mask_j)) continue;  // enumerate environments only
    double v[4];
    v[0] = amplitudes(static_cast<Eigen::Index>(x));                    // dn dn
    v[1] = amplitudes(static_cast<Eigen::Index>(x | mask_j));           // dn up
    v[2] = amplitudes(static_cast<Eigen::Index>(x | mask_i));           // up dn
    v[3] = amplitudes(static_cast<Eigen::Index>(x | mask_i | mask_j));  // up up
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) acc(a, b) += v[a] * v[b];
    }
  }
  s.rho = acc;
  return s;
}

}  // namespace spinchain
