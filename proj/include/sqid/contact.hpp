#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sqid/fmatrix.hpp"
#include "sqid/poly.hpp"
#include "sqid/secant.hpp"

namespace sqid {

// Basis of the space of degree-d dual forms annihilating the Terracini span
// <f_1..f_r> * S_{d/2}; count m = ambient - terracini rank.
std::vector<HomogeneousPoly> hyperplane_basis(
    const std::vector<HomogeneousPoly>& f_list);

// N-r forms completing f_list to a basis of the degree-d/2 piece. Primary
// route: apolar-orthogonal complement of span(f_list); when that complement
// meets span(f_list) (possible over F_p, the pairing can be isotropic), fall
// back to greedy extension by monomials at the non-pivot columns.
std::vector<HomogeneousPoly> complement_basis(
    const std::vector<HomogeneousPoly>& f_list);

// Everything the contact-locus criterion consumes about one tuple of forms.
struct ContactData {
  SecantParams params;
  Modulus mod;
  std::vector<HomogeneousPoly> f_list;
  std::vector<HomogeneousPoly> hyperplanes;  // H_1..H_m, dual degree-d forms
  std::vector<HomogeneousPoly> complement;   // s_{r+1}..s_N, degree d/2
  std::int64_t terracini_rank = 0;

  std::size_t hyperplane_count() const { return hyperplanes.size(); }
};

// Builds hyperplanes and complement from one kernel computation.
// DependentInput when the f_i are linearly dependent.
ContactData make_contact_data(const std::vector<HomogeneousPoly>& f_list);

// Hessian of one dual form on the complement basis: entry (i,j) is the
// scalar contraction <dual, s_i * s_j>. Symmetric.
FMatrix hessian_block(const ContactData& c, const HomogeneousPoly& dual);

enum class HessianMode { RandomCombination, FullStack };

// Rank of the (N-r) x m(N-r) stack of all hyperplane Hessians. FullStack
// streams every block through incremental elimination (exact). RandomCombination
// evaluates one random combination H = sum \lambda_p H_p and returns the rank
// of its single block: a lower bound, sufficient when it reaches N - r.
// m = 0 returns 0.
std::size_t stacked_hessian_rank(const ContactData& c, HessianMode mode,
                                 std::uint64_t seed);

// N minus the stacked rank; upper bound in RandomCombination mode, exact when
// it comes out equal to r.
std::int64_t contact_locus_dim(const ContactData& c, HessianMode mode,
                               std::uint64_t seed);

enum class CertMode { Generic, Specific };
enum class CertVerdict { Certified, Inconclusive };
const char* to_string(CertMode m);
const char* to_string(CertVerdict v);

struct IdentifiabilityCertificate {
  SecantParams params;
  std::uint32_t p = 0;
  std::uint64_t seed = 0;
  CertMode mode = CertMode::Generic;
  int trials = 0;
  std::int64_t terracini_rank = 0;
  std::int64_t expected_dim = 0;
  bool terracini_ok = false;
  std::int64_t hessian_rank = 0;
  std::int64_t target_rank = 0;      // N - r
  std::string hessian_mode;          // "combo" or "full": what produced hessian_rank
  CertVerdict verdict = CertVerdict::Inconclusive;
  std::vector<std::string> unchecked_hypotheses;

  std::string to_json() const;
};

// Monte Carlo certificate of generic orthogonal identifiability at rank r:
// Certified iff some trial has Terracini rank = expected_dim and stacked
// Hessian rank = N - r. One-sided: Inconclusive never means non-identifiable.
// r above the generic rank raises NotSubgeneric; r equal to it runs (a
// filling r simply ends Inconclusive with no hyperplanes to stack).
IdentifiabilityCertificate generic_identifiability(const SecantParams& params,
                                                   const Modulus& mod,
                                                   std::uint64_t seed, int trials,
                                                   HessianMode requested);

// Same criterion evaluated on a caller-supplied tuple. The result lists the
// hypotheses it cannot check (smoothness; expected dimension of the secant,
// discharged when a matching Certified generic certificate is supplied).
IdentifiabilityCertificate specific_identifiability(
    const std::vector<HomogeneousPoly>& f_list, HessianMode requested,
    std::uint64_t seed,
    const IdentifiabilityCertificate* generic_cert = nullptr);

}  // namespace sqid
