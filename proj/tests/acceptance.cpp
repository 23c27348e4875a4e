// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Every tolerance is pinned here: time budgets in milliseconds, all rank and
// count comparisons exact.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sqid/binary.hpp"
#include "sqid/catalecticant.hpp"
#include "sqid/contact.hpp"
#include "sqid/rng.hpp"
#include "sqid/secant.hpp"

using namespace sqid;

namespace {

const Modulus kMod(101);
using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

// A criterion body returns std::nullopt on success, else the reason.
using Reason = std::optional<std::string>;

HomogeneousPoly mono3(int a, int b, int c, fe_t coeff = 1) {
  return HomogeneousPoly::monomial_form(Monomial({a, b, c}), kMod, coeff);
}

std::vector<HomogeneousPoly> random_tuple(int n, int h, int r,
                                          std::uint64_t seed) {
  ResidueStream rng(seed);
  std::vector<HomogeneousPoly> out;
  for (int i = 0; i < r; ++i)
    out.push_back(HomogeneousPoly::random(n, h, kMod, rng));
  return out;
}

// ---- 1: closed formulas ----------------------------------------------------

Reason formula_suite() {
  for (int n = 1; n <= 20; ++n) {
    if (generic_rank(2, n) != n + 1) {
      return "generic_rank(2," + std::to_string(n) + ") != n+1";
    }
  }
  if (generic_rank(4, 2) != 3) return "generic_rank(4,2) != 3";
  // expected_dim feeding the rank: spot checks on both sides of the fill.
  if (expected_dim({2, 4, 3}) != 15 || SecantParams{2, 4, 3}.ambient_dim() != 15) {
    return "expected_dim(2,4,3) != ambient 15";
  }
  if (expected_dim({2, 4, 2}) >= 15) return "expected_dim(2,4,2) not subfilling";
  return std::nullopt;
}

// ---- 2: fermat sextic, fully deterministic ---------------------------------

Reason fermat_deterministic() {
  std::vector<HomogeneousPoly> cubes = {mono3(3, 0, 0), mono3(0, 3, 0),
                                        mono3(0, 0, 3)};
  ContactData c = make_contact_data(cubes);
  if (c.terracini_rank != 27) {
    return "terracini rank " + std::to_string(c.terracini_rank) + " != 27";
  }
  if (c.hyperplane_count() != 1) {
    return "hyperplane count " + std::to_string(c.hyperplane_count()) + " != 1";
  }
  if (!(c.hyperplanes[0] == mono3(2, 2, 2))) {
    return "hyperplane is not the dual of x^2 y^2 z^2";
  }
  std::size_t rank = stacked_hessian_rank(c, HessianMode::FullStack, 0);
  if (rank != 7) return "stacked hessian rank " + std::to_string(rank) + " != 7";
  IdentifiabilityCertificate cert =
      specific_identifiability(cubes, HessianMode::FullStack, 0);
  if (cert.verdict != CertVerdict::Certified) {
    return "specific certificate not Certified";
  }
  return std::nullopt;
}

// ---- 3: identifiability table at desk scale --------------------------------

Reason identifiability_table(std::int64_t per_case_budget_ms) {
  std::set<std::pair<int, int>> grid;  // (n, d)
  for (int d : {4, 6, 8, 10}) grid.insert({2, d});
  for (int d : {4, 6, 8}) grid.insert({3, d});
  for (int n = 3; n <= 8; ++n) grid.insert({n, 4});
  for (int n = 3; n <= 5; ++n) grid.insert({n, 6});
  for (auto [n, d] : grid) {
    int rg = generic_rank(d, n);
    for (int r = 1; r < rg; ++r) {
      Clock::time_point t0 = Clock::now();
      IdentifiabilityCertificate cert = generic_identifiability(
          {n, d, r}, kMod, 0, 3, HessianMode::RandomCombination);
      std::int64_t elapsed = ms_since(t0);
      std::string tag = "(n=" + std::to_string(n) + ",d=" + std::to_string(d) +
                        ",r=" + std::to_string(r) + ")";
      if (cert.verdict != CertVerdict::Certified) {
        return tag + " Inconclusive";
      }
      if (elapsed > per_case_budget_ms) {
        return tag + " took " + std::to_string(elapsed) + " ms";
      }
    }
  }
  return std::nullopt;
}

// ---- 4: dimension table at desk scale --------------------------------------

Reason dimension_table(std::int64_t per_case_budget_ms) {
  std::set<std::tuple<int, int, int>> cases;  // (n, d, r)
  auto add_to = [&cases](int n, int d, int rmax) {
    for (int r = 1; r <= rmax; ++r) cases.insert({n, d, r});
  };
  for (int d = 4; d <= 12; d += 2) add_to(2, d, generic_rank(d, 2));
  for (int d = 4; d <= 10; d += 2) add_to(3, d, generic_rank(d, 3));
  for (int n = 3; n <= 10; ++n) add_to(n, 4, generic_rank(4, n));
  for (int n = 3; n <= 6; ++n) {
    for (int d : {4, 6}) add_to(n, d, n + 2);
  }
  for (auto [n, d, r] : cases) {
    Clock::time_point t0 = Clock::now();
    DimensionReport rep = secant_dim_sample({n, d, r}, kMod, 0, 3);
    std::int64_t elapsed = ms_since(t0);
    std::string tag = "(n=" + std::to_string(n) + ",d=" + std::to_string(d) +
                      ",r=" + std::to_string(r) + ")";
    if (rep.verdict != DimVerdict::NonDefectiveCertified) {
      return tag + " rank " + std::to_string(rep.observed_rank) + " below " +
             std::to_string(std::min(rep.expected_dim, rep.ambient_dim));
    }
    if (elapsed > per_case_budget_ms) {
      return tag + " took " + std::to_string(elapsed) + " ms";
    }
  }
  return std::nullopt;
}

// ---- 5: binary orbit enumeration -------------------------------------------

Reason binary_orbits() {
  const std::vector<std::pair<int, std::size_t>> counts = {
      {2, 1}, {4, 3}, {6, 10}, {8, 35}};
  for (auto [d, expect] : counts) {
    bool all_distinct = false;
    for (std::uint64_t attempt = 0; attempt <= 3 && !all_distinct; ++attempt) {
      // Random factors in general position for this attempt.
      ResidueStream rng(derive_seed(2024, {static_cast<std::uint64_t>(d), attempt}));
      std::vector<HomogeneousPoly> factors;
      auto basis = GradedBasis::shared(1, 1);
      while (static_cast<int>(factors.size()) < d) {
        HomogeneousPoly l = HomogeneousPoly::from_coeffs(
            basis, kMod, {rng.next(kMod), rng.next(kMod)});
        if (l.is_zero()) continue;
        factors.push_back(l);
        if (has_proportional_pair(factors)) factors.pop_back();
      }
      auto decs = orbit_decompositions(factors);
      if (decs.size() != expect) {
        return "d=" + std::to_string(d) + ": " + std::to_string(decs.size()) +
               " decompositions != C(d-1,d/2) = " + std::to_string(expect);
      }
      HomogeneousPoly f = HomogeneousPoly::monomial_form(Monomial({0, 0}), kMod);
      for (const auto& l : factors) f = mul(f, l);
      for (const Decomposition& dec : decs) {
        if (!verify_decomposition(f, dec)) {
          return "d=" + std::to_string(d) + ": a decomposition fails to verify";
        }
      }
      all_distinct = true;
      for (std::size_t a = 0; a < decs.size() && all_distinct; ++a) {
        for (std::size_t b = a + 1; b < decs.size(); ++b) {
          if (distinct_orbits(decs[a], decs[b]) !=
              OrbitComparison::CertifiedDistinct) {
            all_distinct = false;  // re-seed and try again
            break;
          }
        }
      }
    }
    if (!all_distinct) {
      return "d=" + std::to_string(d) +
             ": gram collision persisted over 3 re-seeds";
    }
  }
  return std::nullopt;
}

// ---- 6: arithmetic bound tables --------------------------------------------

struct Rational {
  __int128 num;
  __int128 den;  // > 0
  bool leq(const Rational& o) const { return num * o.den <= o.num * den; }
};

Reason bound_tables() {
  // Six threshold lines: non-defective from the stated degree upward.
  const int lines[6][3] = {{4, 7, 12}, {5, 8, 7},  {5, 9, 14},
                           {6, 9, 6},  {6, 10, 8}, {6, 11, 16}};
  for (const auto& line : lines) {
    int n = line[0], r = line[1], d = line[2];
    if (!bdp_bound_check(n, r, d).certifies()) {
      return "bound fails at its threshold (n=" + std::to_string(n) +
             ",r=" + std::to_string(r) + ",d=" + std::to_string(d) + ")";
    }
    if (bdp_bound_check(n, r, d - 2).certifies()) {
      return "bound holds below its threshold (n=" + std::to_string(n) +
             ",r=" + std::to_string(r) + ",d=" + std::to_string(d - 2) + ")";
    }
  }
  std::mt19937 gen(271828);
  for (int it = 0; it < 100; ++it) {
    int n = 1 + static_cast<int>(gen() % 8);
    int r = 1 + static_cast<int>(gen() % 25);
    int d = 2 + static_cast<int>(gen() % 19);
    // r <= 2n - (2/d)(n+2) in exact rational arithmetic.
    Rational lhs{r, 1};
    Rational rhs{static_cast<__int128>(2) * n * d - 2 * (n + 2), d};
    if (bop2_bound_check(n, r, d) != lhs.leq(rhs)) {
      return "bop2(" + std::to_string(n) + "," + std::to_string(r) + "," +
             std::to_string(d) + ") disagrees with the rational oracle";
    }
  }
  return std::nullopt;
}

// ---- 7: containment of tangent hyperplanes ---------------------------------

Reason containment_property() {
  for (int it = 0; it < 50; ++it) {
    int r = 1 + it % 3;
    auto tup = random_tuple(2, 3, r, derive_seed(7, {static_cast<std::uint64_t>(it)}));
    std::vector<HomogeneousPoly> hs = hyperplane_basis(tup);
    for (const HomogeneousPoly& h : hs) {
      std::size_t rank = middle_cat_rank(h);
      if (rank > static_cast<std::size_t>(10 - r)) {
        return "instance " + std::to_string(it) + ": middle rank " +
               std::to_string(rank) + " > N - r";
      }
      try {
        if (!containment_check(tup, h)) {
          return "instance " + std::to_string(it) + ": containment violated";
        }
      } catch (const NotApolar&) {
        return "instance " + std::to_string(it) +
               ": hyperplane does not annihilate the span";
      }
    }
  }
  return std::nullopt;
}

// ---- 8: exact invariant suites ----------------------------------------------

Reason invariant_suites() {
  std::mt19937_64 gen(161803);
  // (a) Hessian blocks are symmetric for arbitrary dual forms.
  for (int it = 0; it < 200; ++it) {
    int r = 2 + static_cast<int>(gen() % 4);
    ContactData c = make_contact_data(random_tuple(2, 2, r, gen()));
    ResidueStream rng(gen());
    HomogeneousPoly dual = HomogeneousPoly::random(2, 4, kMod, rng);
    FMatrix h = hessian_block(c, dual);
    if (!(h == h.transposed())) {
      return "hessian symmetry broke at trial " + std::to_string(it);
    }
  }
  // (b) Rows of the full-basis Hessian indexed by the f_i vanish.
  for (int it = 0; it < 200; ++it) {
    int r = 2 + static_cast<int>(gen() % 4);
    ContactData c = make_contact_data(random_tuple(4, 2, r, gen()));
    if (c.hyperplanes.empty()) return "no hyperplanes at (n=4,d=4)";
    // Random combination H of the hyperplane basis stays in I_d^perp.
    HomogeneousPoly h = HomogeneousPoly::zero(4, 4, kMod);
    ResidueStream rng(gen());
    for (const HomogeneousPoly& b : c.hyperplanes) h = h + b.scaled(rng.next(kMod));
    std::vector<HomogeneousPoly> full_basis = c.f_list;
    full_basis.insert(full_basis.end(), c.complement.begin(), c.complement.end());
    for (const HomogeneousPoly& f : c.f_list) {
      for (const HomogeneousPoly& b : full_basis) {
        if (pair_full(h, mul(f, b)) != 0) {
          return "full-basis hessian f-row nonzero at trial " +
                 std::to_string(it);
        }
      }
    }
  }
  // (c) Ranks ignore the order of the summands.
  for (int it = 0; it < 200; ++it) {
    int r = 2 + static_cast<int>(gen() % 4);
    auto tup = random_tuple(3, 2, r, gen());
    auto shuffled = tup;
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    ContactData ca = make_contact_data(tup);
    ContactData cb = make_contact_data(shuffled);
    if (ca.terracini_rank != cb.terracini_rank ||
        stacked_hessian_rank(ca, HessianMode::FullStack, 0) !=
            stacked_hessian_rank(cb, HessianMode::FullStack, 0)) {
      return "rank changed under permutation at trial " + std::to_string(it);
    }
  }
  // (d) Gram invariants are constant under orthogonal substitution.
  for (int it = 0; it < 200; ++it) {
    int r = 2 + static_cast<int>(gen() % 4);
    Decomposition dec{random_tuple(1, 2, r, gen())};
    FMatrix m = random_orthogonal(r, kMod, gen());
    Decomposition moved = apply_substitution(m, dec);
    if (!(gram_invariant(dec) == gram_invariant(moved))) {
      return "gram invariant moved at trial " + std::to_string(it);
    }
  }
  // (e) The O(r) identity: sums of squares are preserved exactly.
  for (int it = 0; it < 200; ++it) {
    int r = 2 + static_cast<int>(gen() % 4);
    auto tup = random_tuple(2, 2, r, gen());
    FMatrix m = random_orthogonal(r, kMod, gen());
    Decomposition moved = apply_substitution(m, Decomposition{tup});
    HomogeneousPoly before = HomogeneousPoly::zero(2, 4, kMod);
    for (const auto& f : tup) before = before + mul(f, f);
    HomogeneousPoly after = HomogeneousPoly::zero(2, 4, kMod);
    for (const auto& f : moved.summands) after = after + mul(f, f);
    if (!(before == after)) {
      return "O(r) identity broke at trial " + std::to_string(it);
    }
  }
  return std::nullopt;
}

// ---- 9: quadric sanity -------------------------------------------------------

Reason quadric_sanity() {
  for (int n = 1; n <= 8; ++n) {
    for (int r = 1; r <= n + 1; ++r) {
      DimensionReport rep = secant_dim_sample({n, 2, r}, kMod, 0, 3);
      std::int64_t formula =
          static_cast<std::int64_t>(r) * (n + 1) - binomial(r, 2);
      std::int64_t classical = binomial(n + 2, 2) - binomial(n - r + 2, 2);
      if (rep.observed_rank != formula || formula != classical) {
        return "(n=" + std::to_string(n) + ",r=" + std::to_string(r) +
               "): observed " + std::to_string(rep.observed_rank) +
               ", formula " + std::to_string(formula) + ", classical " +
               std::to_string(classical);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&failures](int idx, const char* label, const Reason& reason,
                            std::int64_t elapsed, std::int64_t budget) {
    bool ok = !reason.has_value();
    std::string why;
    if (!ok) {
      why = *reason;
    } else if (budget > 0 && elapsed > budget) {
      ok = false;
      why = "exceeded " + std::to_string(budget) + " ms budget";
    }
    if (ok) {
      std::printf("[PASS] %d %s (%lld ms)\n", idx, label,
                  static_cast<long long>(elapsed));
    } else {
      std::printf("[FAIL] %d %s: %s (%lld ms)\n", idx, label, why.c_str(),
                  static_cast<long long>(elapsed));
      ++failures;
    }
    std::fflush(stdout);
  };

  auto timed = [&report](int idx, const char* label, auto&& body,
                         std::int64_t budget) {
    auto t0 = Clock::now();
    Reason reason = body();
    report(idx, label, reason, ms_since(t0), budget);
  };

  timed(1, "formula suite (generic ranks, expected dimensions)",
        [] { return formula_suite(); }, 1000);
  timed(2, "fermat sextic deterministic certificate",
        [] { return fermat_deterministic(); }, 1000);
  timed(3, "identifiability table, all subgeneric ranks",
        [] { return identifiability_table(60000); }, 0);
  timed(4, "dimension table, all ranks through the generic one",
        [] { return dimension_table(120000); }, 0);
  timed(5, "binary orbit enumeration, counts and distinctness",
        [] { return binary_orbits(); }, 0);
  timed(6, "arithmetic non-defectivity bounds", [] { return bound_tables(); },
        1000);
  timed(7, "tangent hyperplane containment, 50 instances",
        [] { return containment_property(); }, 0);
  timed(8, "invariant suites, 200 trials each", [] { return invariant_suites(); },
        0);
  timed(9, "quadric sanity, closed-form dimensions", [] { return quadric_sanity(); },
        5000);
  return failures == 0 ? 0 : 1;
}
