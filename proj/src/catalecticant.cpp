#include "sqid/catalecticant.hpp"

#include <string>

namespace sqid {

Catalecticant catalecticant(const HomogeneousPoly& f, int i) {
  const int d = f.degree();
  if (i < 0 || i > d) {
    throw DegreeMismatch("catalecticant index " + std::to_string(i) +
                         " outside [0, " + std::to_string(d) + "]");
  }
  auto rows = GradedBasis::shared(f.n(), i);
  auto cols = GradedBasis::shared(f.n(), d - i);
  FMatrix m(rows->size(), cols->size(), f.modulus());
  for (std::size_t a = 0; a < rows->size(); ++a) {
    const Monomial& g = rows->monomial(a);
    for (std::size_t b = 0; b < cols->size(); ++b) {
      m.at(a, b) = f.coeff(g.times(cols->monomial(b)));
    }
  }
  return Catalecticant{i, d - i, std::move(m)};
}

std::size_t middle_cat_rank(const HomogeneousPoly& f) {
  if (f.degree() % 2 != 0) {
    throw OddDegree("middle catalecticant needs even degree");
  }
  return catalecticant(f, f.degree() / 2).matrix.rank();
}

bool containment_check(const std::vector<HomogeneousPoly>& f_list,
                       const HomogeneousPoly& H) {
  if (f_list.empty()) throw Error("empty form list");
  const HomogeneousPoly& f0 = f_list.front();
  if (H.n() != f0.n()) throw ArityMismatch("mixed variable counts");
  if (H.degree() != 2 * f0.degree()) {
    throw DegreeMismatch("dual form degree must be twice the form degree");
  }
  if (H.modulus() != f0.modulus()) throw Error("mixed moduli");
  Catalecticant cat = catalecticant(H, f0.degree());
  auto half = GradedBasis::shared(f0.n(), f0.degree());
  for (const HomogeneousPoly& f : f_list) {
    if (f.n() != f0.n() || f.degree() != f0.degree()) {
      throw DegreeMismatch("mixed form degrees");
    }
    std::vector<fe_t> v = coeff_vector(f, *half);
    for (fe_t y : cat.matrix.mul_vec(v)) {
      if (y != 0) {
        throw NotApolar("dual form does not annihilate the given span");
      }
    }
  }
  std::size_t N = half->size();
  return cat.matrix.rank() <= N - f_list.size();
}

}  // namespace sqid
