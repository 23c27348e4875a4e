#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"
#include "sqid/binary.hpp"

using sqid::Decomposition;
using sqid::FMatrix;
using sqid::HomogeneousPoly;
using sqid::Modulus;
using sqid::Monomial;
using sqid::OrbitComparison;
using sqid::fe_t;

namespace {

const Modulus kMod(101);

HomogeneousPoly linear(std::int64_t a, std::int64_t b, Modulus mod = kMod) {
  auto basis = sqid::GradedBasis::shared(1, 1);
  return HomogeneousPoly::from_coeffs(basis, mod,
                                      {mod.reduce(a), mod.reduce(b)});
}

std::vector<HomogeneousPoly> generic_factors(std::size_t d,
                                             Modulus mod = kMod) {
  // a x + k y with distinct slopes: pairwise non-proportional.
  std::vector<HomogeneousPoly> out;
  for (std::size_t k = 0; k < d; ++k)
    out.push_back(linear(1, static_cast<std::int64_t>(k), mod));
  return out;
}

HomogeneousPoly product(const std::vector<HomogeneousPoly>& factors) {
  HomogeneousPoly acc = HomogeneousPoly::monomial_form(
      Monomial({0, 0}), factors.front().modulus());
  for (const auto& l : factors) acc = mul(acc, l);
  return acc;
}

// Oracle: determinant by cofactor expansion, for the +-1 check.
fe_t det_oracle(const FMatrix& m, std::vector<std::size_t> cols,
                std::size_t row, const Modulus& mod) {
  if (cols.size() == 1) return m.at(row, cols[0]);
  fe_t acc = 0;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) rest.push_back(cols[j]);
    fe_t minor = det_oracle(m, rest, row + 1, mod);
    fe_t t = mod.mul(m.at(row, cols[k]), minor);
    acc = (k % 2 == 0) ? mod.add(acc, t) : mod.sub(acc, t);
  }
  return acc;
}

fe_t det(const FMatrix& m) {
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cols[j] = j;
  return det_oracle(m, cols, 0, m.modulus());
}

}  // namespace

TEST_CASE("orbit counts match C(d-1, d/2)") {
  CHECK(sqid::orbit_decompositions(generic_factors(2)).size() == 1);
  CHECK(sqid::orbit_decompositions(generic_factors(4)).size() == 3);
  CHECK(sqid::orbit_decompositions(generic_factors(6)).size() == 10);
  CHECK(sqid::orbit_decompositions(generic_factors(8)).size() == 35);
}

TEST_CASE("d = 2: the one decomposition of xy, by hand") {
  std::vector<HomogeneousPoly> factors = {linear(1, 0), linear(0, 1)};
  auto decs = sqid::orbit_decompositions(factors);
  REQUIRE(decs.size() == 1);
  REQUIRE(decs[0].summands.size() == 2);
  // (x+y)/2 = 51x + 51y and i(x-y)/2 = 5x + 96y over F_101 (i = 10).
  CHECK(decs[0].summands[0] == linear(51, 51));
  CHECK(decs[0].summands[1] == linear(5, 96));
  CHECK(sqid::verify_decomposition(product(factors), decs[0]));
}

TEST_CASE("guards on the factor list") {
  CHECK_THROWS_AS(sqid::orbit_decompositions({}), sqid::Error);
  CHECK_THROWS_AS(sqid::orbit_decompositions(generic_factors(3)),
                  sqid::OddDegree);
  // p = 103 = 3 mod 4 has no square root of -1.
  CHECK_THROWS_AS(sqid::orbit_decompositions(generic_factors(2, Modulus(103))),
                  sqid::NoImaginaryUnit);
  // Non-linear or non-binary entries are refused.
  CHECK_THROWS_AS(
      sqid::orbit_decompositions({HomogeneousPoly::zero(1, 2, kMod)}),
      sqid::DegreeMismatch);
  CHECK_THROWS_AS(
      sqid::orbit_decompositions({HomogeneousPoly::zero(2, 1, kMod)}),
      sqid::ArityMismatch);
}

TEST_CASE("every representative verifies and orbits are pairwise distinct") {
  for (std::size_t d : {4u, 6u}) {
    auto factors = generic_factors(d);
    CHECK_FALSE(sqid::has_proportional_pair(factors));
    HomogeneousPoly f = product(factors);
    auto decs = sqid::orbit_decompositions(factors);
    std::set<std::uint64_t> hashes;
    for (const Decomposition& dec : decs) {
      CHECK(sqid::verify_decomposition(f, dec));
      hashes.insert(sqid::gram_invariant(dec).hash());
    }
    CHECK(hashes.size() == decs.size());  // invariants separate all orbits
    for (std::size_t a = 0; a < decs.size(); ++a) {
      for (std::size_t b = a + 1; b < decs.size(); ++b) {
        CHECK(sqid::distinct_orbits(decs[a], decs[b]) ==
              OrbitComparison::CertifiedDistinct);
      }
    }
  }
}

TEST_CASE("verification guards") {
  auto factors = generic_factors(4);
  auto decs = sqid::orbit_decompositions(factors);
  HomogeneousPoly f = product(factors);
  // Perturbed form no longer matches.
  HomogeneousPoly g = f + HomogeneousPoly::monomial_form(Monomial({4, 0}), kMod);
  CHECK_FALSE(sqid::verify_decomposition(g, decs[0]));
  // Degree and arity guards.
  CHECK_THROWS_AS(sqid::verify_decomposition(HomogeneousPoly::zero(1, 3, kMod),
                                             decs[0]),
                  sqid::DegreeMismatch);
  CHECK_THROWS_AS(sqid::verify_decomposition(HomogeneousPoly::zero(2, 4, kMod),
                                             decs[0]),
                  sqid::ArityMismatch);
  CHECK_THROWS_AS(sqid::verify_decomposition(f, Decomposition{}), sqid::Error);
}

TEST_CASE("random orthogonal matrices are orthogonal with det +-1") {
  for (int r = 1; r <= 4; ++r) {
    for (std::uint32_t p : {13u, 101u}) {
      Modulus mod(p);
      FMatrix m = sqid::random_orthogonal(r, mod, 7 * static_cast<std::uint64_t>(r) + p);
      CHECK(m.mul(m.transposed()) ==
            FMatrix::identity(static_cast<std::size_t>(r), mod));
      fe_t dt = det(m);
      bool unit = dt == 1 || dt == p - 1;
      CHECK(unit);
    }
  }
  // Seeds matter.
  CHECK_FALSE(sqid::random_orthogonal(3, kMod, 1) ==
              sqid::random_orthogonal(3, kMod, 2));
  CHECK_THROWS_AS(sqid::random_orthogonal(0, kMod, 1), sqid::Error);
  CHECK_THROWS_AS(sqid::random_orthogonal(2, Modulus(2), 1), sqid::BadModulus);
}

TEST_CASE("gram invariant is constant on orbits") {
  auto factors = generic_factors(6);
  HomogeneousPoly f = product(factors);
  auto decs = sqid::orbit_decompositions(factors);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    FMatrix m = sqid::random_orthogonal(2, kMod, seed);
    Decomposition moved = sqid::apply_substitution(m, decs[seed % decs.size()]);
    // Orthogonal substitution preserves the sum of squares...
    CHECK(sqid::verify_decomposition(f, moved));
    // ...and the invariant, so the pair is indistinguishable by it.
    CHECK(sqid::gram_invariant(moved) ==
          sqid::gram_invariant(decs[seed % decs.size()]));
    CHECK(sqid::distinct_orbits(moved, decs[seed % decs.size()]) ==
          OrbitComparison::PossiblySame);
  }
  CHECK_THROWS_AS(
      sqid::apply_substitution(FMatrix::identity(3, kMod), decs[0]),
      sqid::ShapeMismatch);
}

TEST_CASE("dependent summands are refused by the orbit test") {
  Decomposition dep;
  dep.summands.push_back(linear(1, 2));
  dep.summands.push_back(linear(2, 4));
  auto good = sqid::orbit_decompositions(generic_factors(4))[0];
  CHECK_THROWS_AS(sqid::distinct_orbits(dep, good), sqid::DependentInput);
  CHECK_THROWS_AS(sqid::distinct_orbits(good, dep), sqid::DependentInput);
}

TEST_CASE("proportional factor detection") {
  CHECK(sqid::has_proportional_pair({linear(1, 2), linear(2, 4)}));
  CHECK(sqid::has_proportional_pair({linear(1, 0), linear(3, 0)}));
  CHECK_FALSE(sqid::has_proportional_pair(generic_factors(8)));
}
