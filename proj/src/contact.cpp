#include "sqid/contact.hpp"

#include <string>
#include <utility>

#include "json.hpp"
#include "sqid/rng.hpp"

namespace sqid {

namespace {

// Shared validation; returns the coefficient matrix of f_list (r x N rows).
FMatrix coeff_matrix(const std::vector<HomogeneousPoly>& f_list) {
  if (f_list.empty()) throw Error("empty form list");
  const HomogeneousPoly& f0 = f_list.front();
  for (const HomogeneousPoly& f : f_list) {
    if (f.n() != f0.n()) throw ArityMismatch("mixed variable counts");
    if (f.degree() != f0.degree()) throw DegreeMismatch("mixed degrees");
    if (f.modulus() != f0.modulus()) throw Error("mixed moduli");
  }
  auto basis = GradedBasis::shared(f0.n(), f0.degree());
  FMatrix m(f_list.size(), basis->size(), f0.modulus());
  for (std::size_t i = 0; i < f_list.size(); ++i) {
    std::vector<fe_t> v = coeff_vector(f_list[i], *basis);
    std::copy(v.begin(), v.end(), m.row(i).begin());
  }
  return m;
}

void require_independent(const FMatrix& coeffs) {
  if (coeffs.rank() != coeffs.rows()) {
    throw DependentInput("the given forms are linearly dependent");
  }
}

std::vector<HomogeneousPoly> kernel_columns_as_forms(const FMatrix& kernel,
                                                     int n, int degree,
                                                     Modulus mod) {
  auto basis = GradedBasis::shared(n, degree);
  std::vector<HomogeneousPoly> out;
  out.reserve(kernel.cols());
  for (std::size_t j = 0; j < kernel.cols(); ++j) {
    std::vector<fe_t> v(kernel.rows());
    for (std::size_t i = 0; i < kernel.rows(); ++i) v[i] = kernel.at(i, j);
    out.push_back(HomogeneousPoly::from_coeffs(basis, mod, std::move(v)));
  }
  return out;
}

}  // namespace

std::vector<HomogeneousPoly> hyperplane_basis(
    const std::vector<HomogeneousPoly>& f_list) {
  FMatrix coeffs = coeff_matrix(f_list);
  require_independent(coeffs);
  const HomogeneousPoly& f0 = f_list.front();
  FMatrix t = terracini_matrix(f_list);
  return kernel_columns_as_forms(t.kernel_basis(), f0.n(), 2 * f0.degree(),
                                 f0.modulus());
}

std::vector<HomogeneousPoly> complement_basis(
    const std::vector<HomogeneousPoly>& f_list) {
  FMatrix coeffs = coeff_matrix(f_list);
  require_independent(coeffs);
  const HomogeneousPoly& f0 = f_list.front();
  const Modulus mod = f0.modulus();
  const std::size_t r = f_list.size();
  const std::size_t N = coeffs.cols();

  // apolar-orthogonal complement: kernel of the r x N coefficient matrix
  FMatrix perp = coeffs.kernel_basis();
  {
    RankAccumulator acc(N, mod);
    for (std::size_t i = 0; i < r; ++i) acc.add_column(coeffs.row(i));
    acc.add_block(perp);
    if (acc.rank() == N) {
      return kernel_columns_as_forms(perp, f0.n(), f0.degree(), mod);
    }
  }

  // isotropic span: extend greedily by the monomials at non-pivot columns
  FMatrix w(coeffs);
  std::vector<bool> is_pivot(N, false);
  {
    // recompute pivots with a fresh elimination on a copy
    FMatrix e(coeffs);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < N && rank < e.rows(); ++col) {
      std::size_t pr = rank;
      while (pr < e.rows() && e.at(pr, col) == 0) ++pr;
      if (pr == e.rows()) continue;
      if (pr != rank) {
        for (std::size_t j = 0; j < N; ++j) std::swap(e.at(pr, j), e.at(rank, j));
      }
      fe_t pinv = mod.inv(e.at(rank, col));
      for (std::size_t j = col; j < N; ++j) e.at(rank, j) = mod.mul(e.at(rank, j), pinv);
      for (std::size_t rr = rank + 1; rr < e.rows(); ++rr) {
        fe_t fct = e.at(rr, col);
        if (fct == 0) continue;
        fe_t nf = mod.neg(fct);
        for (std::size_t j = col; j < N; ++j) {
          e.at(rr, j) = mod.add(e.at(rr, j), mod.mul(nf, e.at(rank, j)));
        }
      }
      is_pivot[col] = true;
      ++rank;
    }
  }
  auto basis = GradedBasis::shared(f0.n(), f0.degree());
  std::vector<HomogeneousPoly> out;
  out.reserve(N - r);
  for (std::size_t k = 0; k < N; ++k) {
    if (!is_pivot[k]) {
      out.push_back(HomogeneousPoly::monomial_form(basis->monomial(k), mod));
    }
  }
  return out;
}

ContactData make_contact_data(const std::vector<HomogeneousPoly>& f_list) {
  FMatrix coeffs = coeff_matrix(f_list);
  require_independent(coeffs);
  const HomogeneousPoly& f0 = f_list.front();
  SecantParams params{f0.n(), 2 * f0.degree(), static_cast<int>(f_list.size())};
  params.validate();

  FMatrix t = terracini_matrix(f_list);
  FMatrix kernel = t.kernel_basis();
  ContactData c{params,
                f0.modulus(),
                f_list,
                kernel_columns_as_forms(kernel, params.n, params.d, f0.modulus()),
                complement_basis(f_list),
                static_cast<std::int64_t>(t.cols() - kernel.cols())};
  return c;
}

namespace {

// Dense degree-d coefficient vectors of all products s_i * s_j, i <= j,
// stored at (i,j) and shared with (j,i). Every Hessian block is a plain dot
// product against these.
struct PairProducts {
  std::size_t count = 0;  // N - r
  std::vector<std::vector<fe_t>> prods;  // index i*count+j for i <= j

  const std::vector<fe_t>& at(std::size_t i, std::size_t j) const {
    return i <= j ? prods[i * count + j] : prods[j * count + i];
  }
};

PairProducts pair_products(const ContactData& c) {
  PairProducts pp;
  pp.count = c.complement.size();
  pp.prods.resize(pp.count * pp.count);
  auto full = GradedBasis::shared(c.params.n, c.params.d);
  for (std::size_t i = 0; i < pp.count; ++i) {
    for (std::size_t j = i; j < pp.count; ++j) {
      pp.prods[i * pp.count + j] =
          coeff_vector(mul(c.complement[i], c.complement[j]), *full);
    }
  }
  return pp;
}

FMatrix hessian_from_products(const PairProducts& pp,
                              std::span<const fe_t> dual_coeffs,
                              const Modulus& mod) {
  const std::uint64_t p = mod.p();
  FMatrix h(pp.count, pp.count, mod);
  for (std::size_t i = 0; i < pp.count; ++i) {
    for (std::size_t j = i; j < pp.count; ++j) {
      const std::vector<fe_t>& prod = pp.at(i, j);
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < prod.size(); ++k) {
        acc = (acc + static_cast<std::uint64_t>(dual_coeffs[k]) * prod[k]) % p;
      }
      h.at(i, j) = static_cast<fe_t>(acc);
      h.at(j, i) = static_cast<fe_t>(acc);
    }
  }
  return h;
}

std::vector<fe_t> combination_coeffs(const ContactData& c, std::uint64_t seed) {
  auto full = GradedBasis::shared(c.params.n, c.params.d);
  ResidueStream rng(seed);
  std::vector<fe_t> combo(full->size(), 0);
  for (const HomogeneousPoly& h : c.hyperplanes) {
    fe_t lambda = rng.next(c.mod);
    if (lambda == 0) continue;
    std::vector<fe_t> v = coeff_vector(h, *full);
    for (std::size_t k = 0; k < combo.size(); ++k) {
      combo[k] = c.mod.add(combo[k], c.mod.mul(lambda, v[k]));
    }
  }
  return combo;
}

}  // namespace

FMatrix hessian_block(const ContactData& c, const HomogeneousPoly& dual) {
  if (dual.n() != c.params.n || dual.degree() != c.params.d) {
    throw DegreeMismatch("dual form outside the degree-d graded piece");
  }
  PairProducts pp = pair_products(c);
  auto full = GradedBasis::shared(c.params.n, c.params.d);
  std::vector<fe_t> v = coeff_vector(dual, *full);
  return hessian_from_products(pp, v, c.mod);
}

std::size_t stacked_hessian_rank(const ContactData& c, HessianMode mode,
                                 std::uint64_t seed) {
  if (c.hyperplanes.empty()) return 0;
  const std::size_t nr = c.complement.size();
  PairProducts pp = pair_products(c);
  if (mode == HessianMode::RandomCombination) {
    std::vector<fe_t> combo = combination_coeffs(c, seed);
    return hessian_from_products(pp, combo, c.mod).rank();
  }
  auto full = GradedBasis::shared(c.params.n, c.params.d);
  RankAccumulator acc(nr, c.mod, nr);  // stacked rank never exceeds N - r
  for (const HomogeneousPoly& h : c.hyperplanes) {
    std::vector<fe_t> v = coeff_vector(h, *full);
    acc.add_block(hessian_from_products(pp, v, c.mod));
    if (acc.target_reached()) break;
  }
  return acc.rank();
}

std::int64_t contact_locus_dim(const ContactData& c, HessianMode mode,
                               std::uint64_t seed) {
  return c.params.square_space_dim() -
         static_cast<std::int64_t>(stacked_hessian_rank(c, mode, seed));
}

const char* to_string(CertMode m) {
  return m == CertMode::Generic ? "Generic" : "Specific";
}

const char* to_string(CertVerdict v) {
  return v == CertVerdict::Certified ? "Certified" : "Inconclusive";
}

namespace {

// Hessian evaluation with the redraw policy: in RandomCombination mode draw
// up to 3 fresh combinations, then fall back to the exact full stack; record
// which route produced the final number.
std::pair<std::size_t, std::string> hessian_with_fallback(
    const ContactData& c, HessianMode requested, std::uint64_t seed,
    std::uint64_t trial) {
  const std::size_t target = c.complement.size();
  if (c.hyperplanes.empty()) {
    return {0, requested == HessianMode::FullStack ? "full" : "combo"};
  }
  if (requested == HessianMode::FullStack) {
    return {stacked_hessian_rank(c, HessianMode::FullStack, seed), "full"};
  }
  std::size_t best = 0;
  for (std::uint64_t attempt = 0; attempt < 3; ++attempt) {
    std::uint64_t s = derive_seed(seed, {2, trial, attempt});
    std::size_t rank = stacked_hessian_rank(c, HessianMode::RandomCombination, s);
    if (rank > best) best = rank;
    if (best == target) return {best, "combo"};
  }
  std::size_t full = stacked_hessian_rank(c, HessianMode::FullStack, seed);
  return {full, "full"};
}

IdentifiabilityCertificate evaluate_tuple(
    const std::vector<HomogeneousPoly>& f_list, HessianMode requested,
    std::uint64_t seed, std::uint64_t trial, CertMode mode) {
  ContactData c = make_contact_data(f_list);
  IdentifiabilityCertificate cert;
  cert.params = c.params;
  cert.p = c.mod.p();
  cert.seed = seed;
  cert.mode = mode;
  cert.trials = 1;
  cert.expected_dim = expected_dim(c.params);
  cert.terracini_rank = c.terracini_rank;
  cert.terracini_ok = cert.terracini_rank == cert.expected_dim;
  cert.target_rank = c.params.square_space_dim() - c.params.r;
  auto [rank, route] = hessian_with_fallback(c, requested, seed, trial);
  cert.hessian_rank = static_cast<std::int64_t>(rank);
  cert.hessian_mode = route;
  cert.verdict = cert.terracini_ok && cert.hessian_rank == cert.target_rank
                     ? CertVerdict::Certified
                     : CertVerdict::Inconclusive;
  return cert;
}

}  // namespace

IdentifiabilityCertificate generic_identifiability(const SecantParams& params,
                                                   const Modulus& mod,
                                                   std::uint64_t seed, int trials,
                                                   HessianMode requested) {
  params.validate();
  mod.require_greater_than(params.d);
  if (trials < 1) throw Error("need trials >= 1");
  int rg = generic_rank(params.d, params.n);
  if (params.r > rg) {
    throw NotSubgeneric("r = " + std::to_string(params.r) +
                        " exceeds the generic rank " + std::to_string(rg));
  }

  IdentifiabilityCertificate best;
  for (int t = 0; t < trials; ++t) {
    ResidueStream rng(derive_seed(seed, {1, static_cast<std::uint64_t>(t)}));
    std::vector<HomogeneousPoly> f_list;
    f_list.reserve(static_cast<std::size_t>(params.r));
    for (int i = 0; i < params.r; ++i) {
      f_list.push_back(
          HomogeneousPoly::random(params.n, params.d / 2, mod, rng));
    }
    IdentifiabilityCertificate cert;
    try {
      cert = evaluate_tuple(f_list, requested, seed,
                            static_cast<std::uint64_t>(t), CertMode::Generic);
    } catch (const DependentInput&) {
      continue;  // negligible-probability bad draw; the trial certifies nothing
    }
    if (t == 0 || cert.verdict == CertVerdict::Certified ||
        (best.verdict != CertVerdict::Certified &&
         cert.terracini_rank + cert.hessian_rank >
             best.terracini_rank + best.hessian_rank)) {
      best = cert;
    }
    if (best.verdict == CertVerdict::Certified) break;
  }
  best.seed = seed;
  best.trials = trials;
  best.mode = CertMode::Generic;
  if (best.p == 0) {
    // every trial drew a dependent tuple (practically unreachable)
    best.params = params;
    best.p = mod.p();
    best.expected_dim = expected_dim(params);
    best.target_rank = params.square_space_dim() - params.r;
    best.hessian_mode = requested == HessianMode::FullStack ? "full" : "combo";
  }
  return best;
}

IdentifiabilityCertificate specific_identifiability(
    const std::vector<HomogeneousPoly>& f_list, HessianMode requested,
    std::uint64_t seed, const IdentifiabilityCertificate* generic_cert) {
  IdentifiabilityCertificate cert =
      evaluate_tuple(f_list, requested, seed, 0, CertMode::Specific);
  const SecantParams& pr = cert.params;
  cert.unchecked_hypotheses.push_back(
      "f = sum of the squares of the given forms is a smooth point of sigma_" +
      std::to_string(pr.r) + "(Sq_{" + std::to_string(pr.d) + "," +
      std::to_string(pr.n) + "})");
  bool discharged = generic_cert != nullptr &&
                    generic_cert->mode == CertMode::Generic &&
                    generic_cert->verdict == CertVerdict::Certified &&
                    generic_cert->params.n == pr.n &&
                    generic_cert->params.d == pr.d &&
                    generic_cert->params.r == pr.r;
  if (!discharged) {
    cert.unchecked_hypotheses.push_back(
        "sigma_" + std::to_string(pr.r) + "(Sq_{" + std::to_string(pr.d) + "," +
        std::to_string(pr.n) + "}) has the expected dimension");
  }
  return cert;
}

std::string IdentifiabilityCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = params.n;
  j["d"] = params.d;
  j["r"] = params.r;
  j["p"] = p;
  j["seed"] = seed;
  j["mode"] = to_string(mode);
  j["trials"] = trials;
  j["terracini_rank"] = terracini_rank;
  j["expected_dim"] = expected_dim;
  j["hessian_rank"] = hessian_rank;
  j["target_rank"] = target_rank;
  j["hessian_mode"] = hessian_mode;
  j["verdict"] = to_string(verdict);
  j["unchecked_hypotheses"] = unchecked_hypotheses;
  return j.dump(2);
}

}  // namespace sqid
