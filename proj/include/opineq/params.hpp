#pragma once

#include <algorithm>
#include <optional>

namespace opineq {

// Exponent/weight bundle passed to inequality evaluators. Each registry row
// validates only the fields it uses; unused fields are ignored.
struct ExponentParams {
  double alpha = 0.5;
  double beta = 0.5;
  double gamma = 0.5;
  double delta = 0.5;
  double m = 1.0;
  double r = 1.0;  // rows requiring r >= 1 (or r in [0,1]) check it themselves
  double s = 1.0;
  double p = 2.0;
  double q = 2.0;

  double r0() const { return std::min(1.0 / p, 1.0 / q); }
};

// Which parameter fields a registry row consumes and from which admissible
// boxes they are drawn. Fixed values override the draw.
struct ParamProfile {
  bool uses_alpha_beta = false;    // alpha,beta in [0,2], alpha+beta >= 1
  bool alpha_unit = false;         // alpha in [0,1] alone
  bool uses_gamma_delta = false;   // gamma,delta in [0,2], gamma+delta >= 1
  bool uses_m = false;             // m in [1,3]
  bool m_integer = false;          // m in {1,2,3,4}
  bool uses_r = false;
  double r_lo = 1.0;
  double r_hi = 3.0;
  bool uses_s = false;
  double s_lo = 1.0;
  double s_hi = 3.0;
  bool tie_alpha_beta_inv_s = false;  // alpha = beta = 1/s (s in [1,2])
  bool uses_pq = false;               // p in [1.1,4], q conjugate
  std::optional<double> fixed_alpha;
  std::optional<double> fixed_beta;
  std::optional<double> fixed_s;
};

}  // namespace opineq
