#pragma once

#include <vector>

#include "sqid/fmatrix.hpp"
#include "sqid/poly.hpp"

namespace sqid {

// Matrix of the contraction map from degree-i dual forms into degree-(d-i)
// forms: entry (g, b) is the coefficient of x^(g+b) in f. Rows are indexed
// by the degree-i basis, columns by the degree-(d-i) basis. For i = d/2 the
// matrix is square and symmetric.
struct Catalecticant {
  int source_degree = 0;  // i
  int target_degree = 0;  // d - i
  FMatrix matrix;
};

Catalecticant catalecticant(const HomogeneousPoly& f, int i);  // DegreeMismatch

// Rank of the middle catalecticant; a rank below N = C(d/2+n, n) places f on
// the dual side of the square variety. OddDegree for odd d.
std::size_t middle_cat_rank(const HomogeneousPoly& f);

// For H a dual form annihilating the span <f_1..f_r> * S_{d/2}: verifies
// that the middle catalecticant of H kills every f_i (NotApolar otherwise)
// and returns whether its rank drops to at most N - r.
bool containment_check(const std::vector<HomogeneousPoly>& f_list,
                       const HomogeneousPoly& H);

}  // namespace sqid
