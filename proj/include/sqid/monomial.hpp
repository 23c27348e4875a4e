#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "sqid/errors.hpp"

namespace sqid {

// Exact binomial coefficient; raises Error on int64 overflow.
std::int64_t binomial(std::int64_t n, std::int64_t k);

// Monomial in n+1 variables x0..xn, stored as its exponent vector.
class Monomial {
 public:
  explicit Monomial(std::vector<int> exps);

  int vars() const { return static_cast<int>(exps_.size()); }  // n+1
  int degree() const;
  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exponents() const { return exps_; }

  // Componentwise <=.
  bool divides(const Monomial& m) const;

  // Exponent sum; ArityMismatch on different variable counts.
  Monomial times(const Monomial& m) const;

  // Exponent difference this - m; requires m.divides(*this).
  Monomial over(const Monomial& m) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

 private:
  std::vector<int> exps_;
};

// Ordered basis of one graded piece of the polynomial ring. The order is
// graded-lexicographic: within the fixed total degree, exponent vectors are
// listed in descending lexicographic order, so x0^d is first and xn^d last.
// Coefficient vectors, matrix columns and serialized output all follow this
// order; it is part of the output format and must stay stable.
class GradedBasis {
 public:
  GradedBasis(int n, int degree);

  // Process-wide cache of canonical bases, safe for concurrent use.
  static std::shared_ptr<const GradedBasis> shared(int n, int degree);

  // Same graded piece with an explicit (e.g. shuffled) ordering; `order` must
  // be a permutation of the canonical monomial list.
  static GradedBasis with_order(int n, int degree, std::vector<Monomial> order);

  int n() const { return n_; }
  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }

  const Monomial& monomial(std::size_t k) const { return monomials_[k]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  std::optional<std::size_t> try_index_of(const Monomial& m) const;
  // DegreeMismatch when m is not in this graded piece.
  std::size_t index_of(const Monomial& m) const;

 private:
  GradedBasis() = default;

  int n_ = 0;
  int degree_ = 0;
  std::vector<Monomial> monomials_;
  std::map<std::vector<int>, std::size_t> index_;
};

}  // namespace sqid
