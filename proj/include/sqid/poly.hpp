#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sqid/modular.hpp"
#include "sqid/monomial.hpp"
#include "sqid/rng.hpp"

namespace sqid {

// Dense homogeneous polynomial: a coefficient vector over a fixed graded
// basis. Dual forms (contraction functionals) use the same representation;
// the monomial pairing <(x^g)~, x^b> = [g == b] identifies a graded piece
// with its dual, so no separate dual type exists.
class HomogeneousPoly {
 public:
  HomogeneousPoly(std::shared_ptr<const GradedBasis> basis, Modulus mod);

  static HomogeneousPoly zero(int n, int degree, Modulus mod);
  static HomogeneousPoly monomial_form(const Monomial& m, Modulus mod, fe_t c = 1);
  static HomogeneousPoly from_coeffs(std::shared_ptr<const GradedBasis> basis,
                                     Modulus mod, std::vector<fe_t> coeffs);
  // Dense sample: every coefficient drawn uniformly from [0, p).
  static HomogeneousPoly random(int n, int degree, Modulus mod, ResidueStream& rng);
  // {"n": .., "d": .., "p": .., "terms": [{"exp": [..], "c": ..}, ..]}
  static HomogeneousPoly parse_json(const std::string& text);

  int n() const { return basis_->n(); }
  int degree() const { return basis_->degree(); }
  const GradedBasis& basis() const { return *basis_; }
  const std::shared_ptr<const GradedBasis>& basis_ptr() const { return basis_; }
  Modulus modulus() const { return mod_; }

  std::span<const fe_t> coeffs() const { return coeffs_; }
  fe_t coeff(std::size_t k) const { return coeffs_[k]; }
  fe_t coeff(const Monomial& m) const;
  void set_coeff(std::size_t k, fe_t v) { coeffs_[k] = v; }
  // Adds c * x^m; DegreeMismatch when m lies outside the graded piece.
  void add_term(const Monomial& m, fe_t c);

  bool is_zero() const;
  std::string to_json() const;

  HomogeneousPoly operator+(const HomogeneousPoly& o) const;
  HomogeneousPoly operator-(const HomogeneousPoly& o) const;
  HomogeneousPoly scaled(fe_t c) const;

  bool operator==(const HomogeneousPoly& o) const;

 private:
  std::shared_ptr<const GradedBasis> basis_;
  Modulus mod_;
  std::vector<fe_t> coeffs_;
};

// Graded product; ArityMismatch on different variable counts, Error on
// mixed moduli.
HomogeneousPoly mul(const HomogeneousPoly& f, const HomogeneousPoly& g);

inline HomogeneousPoly operator*(const HomogeneousPoly& f,
                                 const HomogeneousPoly& g) {
  return mul(f, g);
}

// Apolar contraction <dual, f>: the dual monomial (x^g)~ sends x^b to
// x^(b-g) when g divides b, to 0 otherwise, extended bilinearly. Result has
// degree deg f - deg dual; DegreeMismatch when deg dual > deg f.
HomogeneousPoly contract(const HomogeneousPoly& dual, const HomogeneousPoly& f);

// Full-degree contraction collapsed to its scalar: the coefficient pairing
// sum_k dual[k] * f[k].
fe_t pair_full(const HomogeneousPoly& dual, const HomogeneousPoly& f);

// Coefficients of f relative to an explicitly supplied basis ordering of the
// same graded piece.
std::vector<fe_t> coeff_vector(const HomogeneousPoly& f, const GradedBasis& basis);

}  // namespace sqid
