#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sqid/fmatrix.hpp"
#include "sqid/poly.hpp"

namespace sqid {

// One secant problem: sums of r squares of degree-d/2 forms in n+1 variables.
struct SecantParams {
  int n = 0;
  int d = 0;
  int r = 0;

  void validate() const;  // OddDegree for odd d; Error on bad ranges

  std::int64_t square_space_dim() const;  // N = C(d/2+n, n)
  std::int64_t ambient_dim() const;       // C(d+n, n)
};

// r*N - C(r,2): r sliding squares minus the orthogonal-group relations.
// Not capped: verdicts compare against min(expected_dim, ambient_dim).
std::int64_t expected_dim(const SecantParams& params);

// Smallest r whose expected dimension fills the ambient space.
int generic_rank(int d, int n);

// Rows span the degree-d ideal slice <f_1..f_r> * S_{d/2}: row (i,j) holds
// the coefficient vector of f_i * t_j over the degree-d basis, t_j running
// over the degree-d/2 monomials. Rank = dim of the affine tangent span.
FMatrix terracini_matrix(const std::vector<HomogeneousPoly>& f_list);

enum class DimVerdict { NonDefectiveCertified, Inconclusive };
const char* to_string(DimVerdict v);

struct DimensionReport {
  SecantParams params;
  std::uint32_t p = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  std::int64_t observed_rank = 0;  // max over trials
  std::int64_t expected_dim = 0;
  std::int64_t ambient_dim = 0;
  DimVerdict verdict = DimVerdict::Inconclusive;

  std::string to_json() const;
};

// Monte Carlo dimension certificate: samples `trials` random r-tuples of
// degree-d/2 forms and keeps the best Terracini rank. Rank matching
// expected_dim certifies non-defectivity (rank can only drop under
// specialization); a miss is Inconclusive, never a defectivity claim.
DimensionReport secant_dim_sample(const SecantParams& params, const Modulus& mod,
                                  std::uint64_t seed, int trials);

// Arithmetic non-defectivity bound r(d/2 + 1) <= nd + min(n, r-n-2),
// meaningful only for r >= n+2.
struct BdpCheck {
  bool applicable = false;
  bool satisfied = false;
  bool certifies() const { return applicable && satisfied; }
};
BdpCheck bdp_bound_check(int n, int r, int d);

// Arithmetic identifiability bound r <= 2n - (2/d)(n+2), evaluated exactly
// as r*d <= 2*n*d - 2*(n+2).
bool bop2_bound_check(int n, int r, int d);

}  // namespace sqid
