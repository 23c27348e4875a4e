#include "sqid/binary.hpp"

#include <string>
#include <utility>

#include "sqid/rng.hpp"

namespace sqid {

namespace {

void validate_factors(const std::vector<HomogeneousPoly>& factors) {
  if (factors.empty()) throw Error("empty factor list");
  for (const HomogeneousPoly& l : factors) {
    if (l.n() != 1) throw ArityMismatch("factors must be binary forms");
    if (l.degree() != 1) throw DegreeMismatch("factors must be linear");
    if (l.modulus() != factors.front().modulus()) throw Error("mixed moduli");
  }
}

HomogeneousPoly subset_product(const std::vector<HomogeneousPoly>& factors,
                               const std::vector<bool>& pick, bool in) {
  HomogeneousPoly acc = HomogeneousPoly::monomial_form(
      Monomial({0, 0}), factors.front().modulus());
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (pick[k] == in) acc = mul(acc, factors[k]);
  }
  return acc;
}

}  // namespace

std::vector<Decomposition> orbit_decompositions(
    const std::vector<HomogeneousPoly>& linear_factors) {
  validate_factors(linear_factors);
  const std::size_t d = linear_factors.size();
  if (d % 2 != 0) {
    throw OddDegree("need an even number of linear factors");
  }
  const Modulus mod = linear_factors.front().modulus();
  const fe_t imag = mod.sqrt_minus_one();  // NoImaginaryUnit for p = 3 mod 4
  const fe_t half = mod.inv(2);
  const std::size_t k = d / 2;

  // one subset per unordered complementary pair {A, B}: force factor 0 into
  // A, the other k-1 members of A run over ascending combinations of {1..d-1}
  std::vector<Decomposition> out;
  const std::size_t picks = k - 1;
  std::vector<std::size_t> rest(picks);
  for (std::size_t i = 0; i < picks; ++i) rest[i] = i + 1;
  for (;;) {
    std::vector<bool> in_a(d, false);
    in_a[0] = true;
    for (std::size_t idx : rest) in_a[idx] = true;
    HomogeneousPoly pa = subset_product(linear_factors, in_a, true);
    HomogeneousPoly pb = subset_product(linear_factors, in_a, false);
    Decomposition dec;
    dec.summands.push_back((pa + pb).scaled(half));
    dec.summands.push_back((pa - pb).scaled(mod.mul(imag, half)));
    out.push_back(std::move(dec));

    bool advanced = false;
    std::size_t i = picks;
    while (i-- > 0) {
      if (rest[i] < d - picks + i) {
        ++rest[i];
        for (std::size_t q = i + 1; q < picks; ++q) rest[q] = rest[q - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

bool verify_decomposition(const HomogeneousPoly& f, const Decomposition& dec) {
  if (dec.summands.empty()) throw Error("empty decomposition");
  const HomogeneousPoly& g0 = dec.summands.front();
  if (f.n() != g0.n()) throw ArityMismatch("mixed variable counts");
  if (f.degree() != 2 * g0.degree()) {
    throw DegreeMismatch("form degree must be twice the summand degree");
  }
  HomogeneousPoly sum = HomogeneousPoly::zero(f.n(), f.degree(), f.modulus());
  for (const HomogeneousPoly& g : dec.summands) {
    if (g.n() != g0.n() || g.degree() != g0.degree()) {
      throw DegreeMismatch("mixed summand degrees");
    }
    sum = sum + mul(g, g);
  }
  return sum == f;
}

GramInvariant gram_invariant(const Decomposition& dec) {
  if (dec.summands.empty()) throw Error("empty decomposition");
  const HomogeneousPoly& g0 = dec.summands.front();
  const Modulus mod = g0.modulus();
  auto basis = GradedBasis::shared(g0.n(), g0.degree());
  const std::size_t N = basis->size();
  FMatrix g(N, N, mod);
  for (const HomogeneousPoly& f : dec.summands) {
    std::vector<fe_t> v = coeff_vector(f, *basis);
    for (std::size_t a = 0; a < N; ++a) {
      if (v[a] == 0) continue;
      for (std::size_t b = 0; b < N; ++b) {
        g.at(a, b) = mod.add(g.at(a, b), mod.mul(v[a], v[b]));
      }
    }
  }
  return GramInvariant{std::move(g)};
}

std::uint64_t GramInvariant::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&h](std::uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (v >> (8 * byte)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  feed(matrix.rows());
  feed(matrix.cols());
  feed(matrix.modulus().p());
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < matrix.cols(); ++j) feed(matrix.at(i, j));
  }
  return h;
}

const char* to_string(OrbitComparison c) {
  return c == OrbitComparison::CertifiedDistinct ? "CertifiedDistinct"
                                                 : "PossiblySame";
}

namespace {

void require_independent_summands(const Decomposition& dec) {
  const HomogeneousPoly& g0 = dec.summands.front();
  auto basis = GradedBasis::shared(g0.n(), g0.degree());
  FMatrix m(dec.summands.size(), basis->size(), g0.modulus());
  for (std::size_t i = 0; i < dec.summands.size(); ++i) {
    std::vector<fe_t> v = coeff_vector(dec.summands[i], *basis);
    std::copy(v.begin(), v.end(), m.row(i).begin());
  }
  if (m.rank() != m.rows()) {
    throw DependentInput("decomposition has linearly dependent summands");
  }
}

}  // namespace

OrbitComparison distinct_orbits(const Decomposition& a, const Decomposition& b) {
  if (a.summands.empty() || b.summands.empty()) {
    throw Error("empty decomposition");
  }
  require_independent_summands(a);
  require_independent_summands(b);
  return gram_invariant(a) == gram_invariant(b)
             ? OrbitComparison::PossiblySame
             : OrbitComparison::CertifiedDistinct;
}

FMatrix random_orthogonal(int r, const Modulus& mod, std::uint64_t seed) {
  if (r < 1) throw Error("need r >= 1");
  if (mod.p() == 2) throw BadModulus("need an odd modulus");
  ResidueStream rng(seed);
  const std::size_t rr = static_cast<std::size_t>(r);
  FMatrix m = FMatrix::identity(rr, mod);
  std::vector<fe_t> v(rr);
  for (int round = 0; round < r * r; ++round) {
    fe_t norm = 0;
    for (;;) {
      for (std::size_t i = 0; i < rr; ++i) v[i] = rng.next(mod);
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < rr; ++i) {
        acc = (acc + static_cast<std::uint64_t>(v[i]) * v[i]) % mod.p();
      }
      norm = static_cast<fe_t>(acc);
      if (norm != 0) break;  // isotropic or zero vector: no reflection
    }
    // M <- M * (I - 2 v v^T / (v^T v))
    fe_t s = mod.mul(2, mod.inv(norm));
    std::vector<fe_t> mv(rr, 0);  // mv = M v
    for (std::size_t i = 0; i < rr; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < rr; ++j) {
        acc = (acc + static_cast<std::uint64_t>(m.at(i, j)) * v[j]) % mod.p();
      }
      mv[i] = static_cast<fe_t>(acc);
    }
    for (std::size_t i = 0; i < rr; ++i) {
      fe_t c = mod.mul(s, mv[i]);
      if (c == 0) continue;
      for (std::size_t j = 0; j < rr; ++j) {
        m.at(i, j) = mod.sub(m.at(i, j), mod.mul(c, v[j]));
      }
    }
  }
  for (std::size_t j = 0; j < rr; ++j) {
    if (rng.next_u64() & 1) {
      for (std::size_t i = 0; i < rr; ++i) m.at(i, j) = mod.neg(m.at(i, j));
    }
  }
  return m;
}

Decomposition apply_substitution(const FMatrix& m, const Decomposition& dec) {
  if (m.rows() != dec.summands.size() || m.cols() != dec.summands.size()) {
    throw ShapeMismatch("substitution matrix must be r x r");
  }
  const HomogeneousPoly& g0 = dec.summands.front();
  Decomposition out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    HomogeneousPoly g = HomogeneousPoly::zero(g0.n(), g0.degree(), g0.modulus());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      g = g + dec.summands[j].scaled(m.at(i, j));
    }
    out.summands.push_back(std::move(g));
  }
  return out;
}

bool has_proportional_pair(const std::vector<HomogeneousPoly>& linear_factors) {
  validate_factors(linear_factors);
  const Modulus mod = linear_factors.front().modulus();
  for (std::size_t i = 0; i < linear_factors.size(); ++i) {
    for (std::size_t j = i + 1; j < linear_factors.size(); ++j) {
      fe_t a = linear_factors[i].coeff(static_cast<std::size_t>(0));
      fe_t b = linear_factors[i].coeff(static_cast<std::size_t>(1));
      fe_t c = linear_factors[j].coeff(static_cast<std::size_t>(0));
      fe_t e = linear_factors[j].coeff(static_cast<std::size_t>(1));
      if (mod.sub(mod.mul(a, e), mod.mul(b, c)) == 0) return true;
    }
  }
  return false;
}

}  // namespace sqid
