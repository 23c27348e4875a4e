#pragma once

#include <cstdint>
#include <vector>

#include "sqid/fmatrix.hpp"
#include "sqid/poly.hpp"

namespace sqid {

// One sums-of-squares decomposition f = sum f_i^2, kept as its summand tuple.
struct Decomposition {
  std::vector<HomogeneousPoly> summands;
};

// Sum of v_i v_i^T over the summands' coefficient vectors. Orthogonal
// substitution of the tuple leaves it unchanged, so unequal invariants
// certify distinct orbits (the converse does not hold).
struct GramInvariant {
  FMatrix matrix;

  std::uint64_t hash() const;  // stable FNV-1a over shape, modulus, entries
  bool operator==(const GramInvariant& o) const { return matrix == o.matrix; }
  bool operator!=(const GramInvariant& o) const { return !(*this == o); }
};

// All orbit representatives of two-square decompositions of the product of
// the given d linear binary forms: one per unordered pair {A, B} of
// complementary d/2-subsets, namely ((P_A + P_B)/2, i(P_A - P_B)/2) with
// i^2 = -1. Count C(d-1, d/2). OddDegree for odd d; NoImaginaryUnit when
// p = 3 mod 4.
std::vector<Decomposition> orbit_decompositions(
    const std::vector<HomogeneousPoly>& linear_factors);

// Exact equality of f against the expanded sum of squares.
bool verify_decomposition(const HomogeneousPoly& f, const Decomposition& dec);

GramInvariant gram_invariant(const Decomposition& dec);

enum class OrbitComparison { CertifiedDistinct, PossiblySame };
const char* to_string(OrbitComparison c);

// One-sided orbit test via Gram invariants; DependentInput when either
// tuple has linearly dependent summands.
OrbitComparison distinct_orbits(const Decomposition& a, const Decomposition& b);

// Product of r*r random reflections I - 2vv^T/(v^T v) and a random sign
// flip per axis; satisfies M M^T = I exactly. Needs odd p.
FMatrix random_orthogonal(int r, const Modulus& mod, std::uint64_t seed);

// Tuple substitution g_i = sum_j m(i,j) f_j.
Decomposition apply_substitution(const FMatrix& m, const Decomposition& dec);

// Advisory flag for the "general position" assumption behind the orbit count.
bool has_proportional_pair(const std::vector<HomogeneousPoly>& linear_factors);

}  // namespace sqid
