#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opineq/matcore.hpp"
#include "opineq/params.hpp"

namespace opineq::gen {

enum class Family {
  GINIBRE,
  GUE,
  HAAR_UNITARY,
  NORMAL,
  NILPOTENT_SHIFT,
  RANK_ONE,
  REID_PAIR,
  FG_PAIR,
  PARAM_2X2,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Identical spec (including draw index) => bitwise-identical output.
struct GeneratorSpec {
  Family family = Family::GINIBRE;
  int dim = 2;
  std::uint64_t seed = 0;
  std::uint64_t draw = 0;          // stream position for campaign reproducibility
  std::vector<double> extra;       // family-specific; see family docs
};

struct Sample {
  matcore::ComplexMatrix first;
  std::optional<matcore::ComplexMatrix> second;  // pair families
  std::optional<matcore::PolyHint> hint;         // recorded polynomial for pairs
  std::vector<double> drawn_extra;               // structured parameters drawn
};

// Families:
//   GINIBRE         iid standard complex Gaussian entries
//   GUE             Hermitianized Ginibre (G + G*)/2
//   HAAR_UNITARY    QR of Ginibre with phase correction (rotation invariant)
//   NORMAL          U diag(complex Gaussian) U*, U Haar
//   NILPOTENT_SHIFT ones on the superdiagonal
//   RANK_ONE        outer product of two Gaussian vectors
//   REID_PAIR       (A, B): A PSD from a GUE shift, B real cubic in A, so AB
//                   is selfadjoint; coefficients recorded in drawn_extra/hint
//   FG_PAIR         (A, B): A Ginibre, B real cubic in |A|, so |A|B = B*|A|
//   PARAM_2X2       [[0,t],[0,0]], t*I, and [[a,b],[0,c]] rotated by draw
//                   index; extra = (t, a, b, c) overrides ((a,b,c) all zero
//                   selects the nilpotent shape)
Sample sample(const GeneratorSpec& spec);

// Complex Gaussian vector normalized to unit length.
matcore::Vector sample_unit_vector(int dim, std::uint64_t seed);

// Parameters drawn uniformly from the admissible boxes of `profile`
// (alpha,beta in [0,2] conditioned on alpha+beta >= 1 by rejection; m,r,s
// from the profile ranges; p in [1.1,4] with q conjugate).
ExponentParams sample_params(const ParamProfile& profile, std::uint64_t seed);

// Parameters for the named registry row (profile looked up in catalog).
ExponentParams sample_params(const std::string& ineq_id, std::uint64_t seed);

// Positive scalar pair in [0.01, 10] for the scalar lemma rows.
std::pair<double, double> sample_scalars(std::uint64_t seed);

// Stream key mixing so campaigns can derive disjoint per-draw seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag,
                       std::uint64_t draw);

// Counter-based stream (splitmix64 over a mixed key). Exposed for tests.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t k1, std::uint64_t k2, std::uint64_t k3);
  std::uint64_t next_u64();
  double uniform01();                      // [0, 1)
  double uniform(double lo, double hi);
  double gaussian();                       // standard normal, Box-Muller
  matcore::Complex complex_gaussian();     // E|z|^2 = 1

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace opineq::gen
