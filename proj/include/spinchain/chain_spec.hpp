#pragma once

#include <string>
#include <vector>

#include "spinchain/errors.hpp"

namespace spinchain {

// Global S_z-parity sector label. The value is the P_z eigenvalue.
enum class Parity : int { even = +1, odd = -1 };

inline int parity_sign(Parity p) { return static_cast<int>(p); }
inline const char* parity_label(Parity p) { return p == Parity::even ? "+" : "-"; }
inline Parity opposite(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }

// Physical specification of a cyclic XYZ chain in a transverse field:
//
//   H = b S_z - sum_{i<j} r_{j-i} (v_x s_x^i s_x^j + v_y s_y^i s_y^j + v_z s_z^i s_z^j)
//
// with cyclic range weights r_l = r_{n-l}. Construction enforces the canonical
// orientation v_x >= |v_y|, b >= 0 (any chain can be rotated into it).
struct ChainSpec {
  int n = 0;               // site count
  double vx = 0.0;         // coupling strengths
  double vy = 0.0;
  double vz = 0.0;
  std::vector<double> range;  // r_1 .. r_{n-1}, range[l-1] = r_l
  double b = 0.0;          // transverse field

  // r_l = delta_{l,1} + delta_{l,n-1}; each adjacent bond weighted once
  // (twice for n = 2, where the two directions coincide).
  static ChainSpec nearest_neighbor(int n, double vx, double vy, double vz, double b);

  // r_l = 2/(n-1) for all l, so that r = 1. Coincides with nearest_neighbor
  // at n = 2.
  static ChainSpec fully_connected(int n, double vx, double vy, double vz, double b);

  static ChainSpec with_range(int n, double vx, double vy, double vz,
                              std::vector<double> range, double b);

  ChainSpec with_field(double new_b) const;

  double r(int l) const { return range[static_cast<size_t>(l) - 1]; }
  double range_half_sum() const;               // r = (1/2) sum_l r_l
  bool attractive() const;                     // all r_l >= 0
  bool is_nearest_neighbor() const;
  bool is_fully_connected() const;
  double vplus() const { return 0.5 * (vx + vy); }
  double vminus() const { return 0.5 * (vx - vy); }

  void validate() const;  // throws InvalidChainSpec
};

}  // namespace spinchain
