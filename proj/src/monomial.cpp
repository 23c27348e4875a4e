#include "sqid/monomial.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <utility>

namespace sqid {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t res = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // res * (n-k+i) is divisible by i: C(n-k+i, i) is an integer
    std::int64_t num = n - k + i;
    if (res > 0 && num > 0 && res > (INT64_MAX / num)) {
      throw Error("binomial overflow: C(" + std::to_string(n) + "," +
                  std::to_string(k) + ")");
    }
    res = res * num / i;
  }
  return res;
}

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  if (exps_.empty()) throw ArityMismatch("monomial needs at least one variable");
  for (int e : exps_) {
    if (e < 0) throw Error("negative exponent in monomial");
  }
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& m) const {
  if (vars() != m.vars()) {
    throw ArityMismatch("divisibility needs equal variable counts");
  }
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > m.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::times(const Monomial& m) const {
  if (vars() != m.vars()) {
    throw ArityMismatch("product needs equal variable counts");
  }
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += m.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::over(const Monomial& m) const {
  if (!m.divides(*this)) {
    throw Error("monomial quotient is not a monomial");
  }
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= m.exps_[i];
  return Monomial(std::move(e));
}

namespace {

void enumerate_glex(int vars_left, int deg_left, std::vector<int>& cur,
                    std::vector<Monomial>& out) {
  if (vars_left == 1) {
    cur.push_back(deg_left);
    out.push_back(Monomial(cur));
    cur.pop_back();
    return;
  }
  for (int e = deg_left; e >= 0; --e) {
    cur.push_back(e);
    enumerate_glex(vars_left - 1, deg_left - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

GradedBasis::GradedBasis(int n, int degree) : n_(n), degree_(degree) {
  if (n < 0) throw ArityMismatch("variable index bound must be >= 0");
  if (degree < 0) throw DegreeMismatch("degree must be >= 0");
  std::vector<int> cur;
  cur.reserve(static_cast<std::size_t>(n) + 1);
  enumerate_glex(n + 1, degree, cur, monomials_);
  for (std::size_t k = 0; k < monomials_.size(); ++k) {
    index_.emplace(monomials_[k].exponents(), k);
  }
}

std::shared_ptr<const GradedBasis> GradedBasis::shared(int n, int degree) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const GradedBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, degree);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto basis = std::shared_ptr<const GradedBasis>(new GradedBasis(n, degree));
  cache.emplace(key, basis);
  return basis;
}

GradedBasis GradedBasis::with_order(int n, int degree,
                                    std::vector<Monomial> order) {
  GradedBasis canonical(n, degree);
  if (order.size() != canonical.size()) {
    throw ShapeMismatch("ordering must list every monomial exactly once");
  }
  GradedBasis b;
  b.n_ = n;
  b.degree_ = degree;
  b.monomials_ = std::move(order);
  for (std::size_t k = 0; k < b.monomials_.size(); ++k) {
    const Monomial& m = b.monomials_[k];
    if (m.vars() != n + 1 || m.degree() != degree) {
      throw DegreeMismatch("ordering contains a monomial outside the graded piece");
    }
    if (!b.index_.emplace(m.exponents(), k).second) {
      throw ShapeMismatch("ordering repeats a monomial");
    }
  }
  return b;
}

std::optional<std::size_t> GradedBasis::try_index_of(const Monomial& m) const {
  auto it = index_.find(m.exponents());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GradedBasis::index_of(const Monomial& m) const {
  auto idx = try_index_of(m);
  if (!idx) throw DegreeMismatch("monomial is not in this graded piece");
  return *idx;
}

}  // namespace sqid
