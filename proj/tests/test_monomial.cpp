#include <algorithm>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "sqid/monomial.hpp"

using sqid::GradedBasis;
using sqid::Monomial;
using sqid::binomial;

namespace {

// Oracle: Pascal recursion, no multiplication.
std::int64_t pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::int64_t> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
  return row[k];
}

// Oracle: the intended basis order as a comparator on exponent vectors.
bool glex_before(const Monomial& a, const Monomial& b) {
  return a.exponents() > b.exponents();  // descending lex within a degree
}

}  // namespace

TEST_CASE("binomial against Pascal and known values") {
  for (int n = 0; n <= 30; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == pascal(n, k));
  CHECK(binomial(33, 4) == 40920);
  CHECK(binomial(19, 10) == 92378);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK_THROWS_AS(binomial(70, 35), sqid::Error);  // > int64
}

TEST_CASE("monomial arithmetic") {
  Monomial a({2, 1, 0});
  Monomial b({1, 1, 1});
  CHECK(a.vars() == 3);
  CHECK(a.degree() == 3);
  CHECK(a.times(b) == Monomial({3, 2, 1}));
  CHECK(a.times(b).over(b) == a);
  CHECK(b.divides(a.times(b)));
  CHECK_FALSE(b.divides(a));  // a has no x2
  CHECK(Monomial({0, 0, 0}).divides(a));
  CHECK_THROWS_AS(a.times(Monomial({1, 1})), sqid::ArityMismatch);
}

TEST_CASE("basis size and order for n = 2, d = 2") {
  GradedBasis basis(2, 2);
  CHECK(basis.size() == 6);
  std::vector<std::vector<int>> expect = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1},
                                          {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  for (std::size_t k = 0; k < 6; ++k)
    CHECK(basis.monomial(k).exponents() == expect[k]);
}

TEST_CASE("order matches the comparator oracle on larger pieces") {
  for (auto [n, d] : {std::pair{1, 8}, std::pair{2, 6}, std::pair{3, 4},
                      std::pair{4, 3}}) {
    GradedBasis basis(n, d);
    CHECK(basis.size() ==
          static_cast<std::size_t>(binomial(d + n, n)));
    CHECK(basis.monomial(0).exponents()[0] == d);  // x0^d first
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) {
      CHECK(glex_before(basis.monomial(k), basis.monomial(k + 1)));
      CHECK(basis.monomial(k).degree() == d);
    }
  }
}

TEST_CASE("index_of inverts monomial()") {
  GradedBasis basis(3, 4);
  for (std::size_t k = 0; k < basis.size(); ++k)
    CHECK(basis.index_of(basis.monomial(k)) == k);
  CHECK_FALSE(basis.try_index_of(Monomial({5, 0, 0, 0})).has_value());
  CHECK_FALSE(basis.try_index_of(Monomial({4, 0, 0})).has_value());
  CHECK_THROWS_AS(basis.index_of(Monomial({1, 1, 1, 0})),
                  sqid::DegreeMismatch);
}

TEST_CASE("shared cache returns one instance per signature") {
  auto a = GradedBasis::shared(2, 6);
  auto b = GradedBasis::shared(2, 6);
  auto c = GradedBasis::shared(2, 4);
  CHECK(a.get() == b.get());
  CHECK(a.get() != c.get());
  CHECK(a->size() == 28);
}

TEST_CASE("with_order keeps content, changes indexing") {
  GradedBasis canon(1, 3);
  std::vector<Monomial> order = canon.monomials();
  std::reverse(order.begin(), order.end());
  GradedBasis rev = GradedBasis::with_order(1, 3, order);
  CHECK(rev.size() == canon.size());
  for (std::size_t k = 0; k < rev.size(); ++k)
    CHECK(rev.monomial(k) == canon.monomial(canon.size() - 1 - k));

  // Not a permutation: duplicate entry.
  std::vector<Monomial> bad(canon.size(), canon.monomial(0));
  CHECK_THROWS_AS(GradedBasis::with_order(1, 3, bad), sqid::ShapeMismatch);
  // Wrong degree in the list.
  std::vector<Monomial> wrong = canon.monomials();
  wrong[0] = Monomial({2, 0});
  CHECK_THROWS_AS(GradedBasis::with_order(1, 3, wrong), sqid::DegreeMismatch);
}
