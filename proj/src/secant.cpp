#include "sqid/secant.hpp"

#include <string>

#include "json.hpp"
#include "sqid/rng.hpp"

namespace sqid {

void SecantParams::validate() const {
  if (n < 1) throw Error("need n >= 1");
  if (d < 2) throw Error("need d >= 2");
  if (d % 2 != 0) {
    throw OddDegree("degree " + std::to_string(d) + " is odd; squares have even degree");
  }
  if (r < 1) throw Error("need r >= 1");
}

std::int64_t SecantParams::square_space_dim() const {
  return binomial(d / 2 + n, n);
}

std::int64_t SecantParams::ambient_dim() const { return binomial(d + n, n); }

std::int64_t expected_dim(const SecantParams& params) {
  params.validate();
  return static_cast<std::int64_t>(params.r) * params.square_space_dim() -
         binomial(params.r, 2);
}

int generic_rank(int d, int n) {
  SecantParams probe{n, d, 1};
  probe.validate();
  std::int64_t ambient = probe.ambient_dim();
  // r = N always fills: N*N - C(N,2) = C(N+1,2) >= ambient since squares span
  for (int r = 1;; ++r) {
    probe.r = r;
    if (expected_dim(probe) >= ambient) return r;
  }
}

FMatrix terracini_matrix(const std::vector<HomogeneousPoly>& f_list) {
  if (f_list.empty()) throw Error("empty form list");
  const HomogeneousPoly& f0 = f_list.front();
  for (const HomogeneousPoly& f : f_list) {
    if (f.n() != f0.n()) throw ArityMismatch("mixed variable counts");
    if (f.degree() != f0.degree()) throw DegreeMismatch("mixed degrees");
    if (f.modulus() != f0.modulus()) throw Error("mixed moduli");
  }
  const int n = f0.n();
  const int h = f0.degree();
  const Modulus mod = f0.modulus();
  auto half = GradedBasis::shared(n, h);
  auto full = GradedBasis::shared(n, 2 * h);
  const std::size_t N = half->size();
  FMatrix m(f_list.size() * N, full->size(), mod);
  for (std::size_t i = 0; i < f_list.size(); ++i) {
    const HomogeneousPoly& f = f_list[i];
    for (std::size_t j = 0; j < N; ++j) {
      const Monomial& t = half->monomial(j);
      fe_t* row = m.row(i * N + j).data();
      for (std::size_t k = 0; k < f.basis().size(); ++k) {
        fe_t c = f.coeff(k);
        if (c == 0) continue;
        row[full->index_of(t.times(f.basis().monomial(k)))] = c;
      }
    }
  }
  return m;
}

const char* to_string(DimVerdict v) {
  switch (v) {
    case DimVerdict::NonDefectiveCertified:
      return "NonDefectiveCertified";
    case DimVerdict::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

DimensionReport secant_dim_sample(const SecantParams& params, const Modulus& mod,
                                  std::uint64_t seed, int trials) {
  params.validate();
  mod.require_greater_than(params.d);
  if (trials < 1) throw Error("need trials >= 1");

  DimensionReport rep;
  rep.params = params;
  rep.p = mod.p();
  rep.seed = seed;
  rep.trials = trials;
  rep.expected_dim = expected_dim(params);
  rep.ambient_dim = params.ambient_dim();
  const std::int64_t want =
      rep.expected_dim < rep.ambient_dim ? rep.expected_dim : rep.ambient_dim;

  for (int t = 0; t < trials; ++t) {
    ResidueStream rng(derive_seed(seed, {1, static_cast<std::uint64_t>(t)}));
    std::vector<HomogeneousPoly> f_list;
    f_list.reserve(static_cast<std::size_t>(params.r));
    std::vector<std::vector<fe_t>> coeff_rows;
    for (int i = 0; i < params.r; ++i) {
      f_list.push_back(
          HomogeneousPoly::random(params.n, params.d / 2, mod, rng));
      auto c = f_list.back().coeffs();
      coeff_rows.emplace_back(c.begin(), c.end());
    }
    // a dependent tuple certifies nothing (the rank bound argument needs
    // independent summands); discard the trial
    if (FMatrix::from_rows(coeff_rows, mod).rank() !=
        static_cast<std::size_t>(params.r)) {
      continue;
    }
    std::int64_t rank =
        static_cast<std::int64_t>(terracini_matrix(f_list).rank());
    if (rank > rep.observed_rank) rep.observed_rank = rank;
    if (rep.observed_rank >= want) break;
  }
  rep.verdict = rep.observed_rank == want ? DimVerdict::NonDefectiveCertified
                                          : DimVerdict::Inconclusive;
  return rep;
}

std::string DimensionReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = params.n;
  j["d"] = params.d;
  j["r"] = params.r;
  j["p"] = p;
  j["seed"] = seed;
  j["trials"] = trials;
  j["observed_rank"] = observed_rank;
  j["expected_dim"] = expected_dim;
  j["ambient_dim"] = ambient_dim;
  j["verdict"] = to_string(verdict);
  return j.dump(2);
}

BdpCheck bdp_bound_check(int n, int r, int d) {
  BdpCheck out;
  out.applicable = r >= n + 2;
  if (!out.applicable) return out;
  std::int64_t b = std::min<std::int64_t>(n, r - n - 2);
  // r(d/2 + 1) <= nd + b, cleared of the half to stay exact for any d
  out.satisfied = static_cast<std::int64_t>(r) * (d + 2) <=
                  2 * static_cast<std::int64_t>(n) * d + 2 * b;
  return out;
}

bool bop2_bound_check(int n, int r, int d) {
  if (d < 2) throw Error("need d >= 2");
  // r <= 2n - (2/d)(n+2), cleared of denominators over positive d
  return static_cast<std::int64_t>(r) * d <=
         2 * static_cast<std::int64_t>(n) * d - 2 * (static_cast<std::int64_t>(n) + 2);
}

}  // namespace sqid
