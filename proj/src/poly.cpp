#include "sqid/poly.hpp"

#include <utility>

#include "json.hpp"

namespace sqid {

HomogeneousPoly::HomogeneousPoly(std::shared_ptr<const GradedBasis> basis,
                                 Modulus mod)
    : basis_(std::move(basis)), mod_(mod), coeffs_(basis_->size(), 0) {}

HomogeneousPoly HomogeneousPoly::zero(int n, int degree, Modulus mod) {
  return HomogeneousPoly(GradedBasis::shared(n, degree), mod);
}

HomogeneousPoly HomogeneousPoly::monomial_form(const Monomial& m, Modulus mod,
                                               fe_t c) {
  HomogeneousPoly f = zero(m.vars() - 1, m.degree(), mod);
  f.add_term(m, c);
  return f;
}

HomogeneousPoly HomogeneousPoly::from_coeffs(
    std::shared_ptr<const GradedBasis> basis, Modulus mod,
    std::vector<fe_t> coeffs) {
  if (coeffs.size() != basis->size()) {
    throw ShapeMismatch("coefficient vector length does not match basis size");
  }
  HomogeneousPoly f(std::move(basis), mod);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] >= mod.p()) throw Error("coefficient not a canonical residue");
  }
  f.coeffs_ = std::move(coeffs);
  return f;
}

HomogeneousPoly HomogeneousPoly::random(int n, int degree, Modulus mod,
                                        ResidueStream& rng) {
  HomogeneousPoly f = zero(n, degree, mod);
  for (std::size_t k = 0; k < f.coeffs_.size(); ++k) f.coeffs_[k] = rng.next(mod);
  return f;
}

fe_t HomogeneousPoly::coeff(const Monomial& m) const {
  return coeffs_[basis_->index_of(m)];
}

void HomogeneousPoly::add_term(const Monomial& m, fe_t c) {
  std::size_t k = basis_->index_of(m);
  coeffs_[k] = mod_.add(coeffs_[k], c);
}

bool HomogeneousPoly::is_zero() const {
  for (fe_t c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

HomogeneousPoly HomogeneousPoly::operator+(const HomogeneousPoly& o) const {
  if (basis_->n() != o.n() || basis_->degree() != o.degree()) {
    throw DegreeMismatch("sum needs matching variable count and degree");
  }
  if (mod_ != o.mod_) throw Error("mixed moduli in polynomial sum");
  HomogeneousPoly out(*this);
  const bool same_order = basis_ == o.basis_;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    fe_t oc = same_order ? o.coeffs_[k]
                         : o.coeffs_[o.basis_->index_of(basis_->monomial(k))];
    out.coeffs_[k] = mod_.add(coeffs_[k], oc);
  }
  return out;
}

HomogeneousPoly HomogeneousPoly::operator-(const HomogeneousPoly& o) const {
  return *this + o.scaled(mod_.neg(1));
}

HomogeneousPoly HomogeneousPoly::scaled(fe_t c) const {
  HomogeneousPoly out(*this);
  for (fe_t& v : out.coeffs_) v = mod_.mul(v, c);
  return out;
}

bool HomogeneousPoly::operator==(const HomogeneousPoly& o) const {
  if (basis_->n() != o.n() || basis_->degree() != o.degree() || mod_ != o.mod_) {
    return false;
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != o.coeffs_[o.basis_->index_of(basis_->monomial(k))]) {
      return false;
    }
  }
  return true;
}

HomogeneousPoly mul(const HomogeneousPoly& f, const HomogeneousPoly& g) {
  if (f.n() != g.n()) throw ArityMismatch("product needs equal variable counts");
  if (f.modulus() != g.modulus()) throw Error("mixed moduli in polynomial product");
  const Modulus mod = f.modulus();
  HomogeneousPoly out(GradedBasis::shared(f.n(), f.degree() + g.degree()), mod);
  const GradedBasis& ob = out.basis();
  for (std::size_t i = 0; i < f.basis().size(); ++i) {
    fe_t a = f.coeff(i);
    if (a == 0) continue;
    const Monomial& mi = f.basis().monomial(i);
    for (std::size_t j = 0; j < g.basis().size(); ++j) {
      fe_t b = g.coeff(j);
      if (b == 0) continue;
      std::size_t k = ob.index_of(mi.times(g.basis().monomial(j)));
      out.set_coeff(k, mod.add(out.coeff(k), mod.mul(a, b)));
    }
  }
  return out;
}

HomogeneousPoly contract(const HomogeneousPoly& dual, const HomogeneousPoly& f) {
  if (dual.n() != f.n()) throw ArityMismatch("contraction needs equal variable counts");
  if (dual.modulus() != f.modulus()) throw Error("mixed moduli in contraction");
  if (dual.degree() > f.degree()) {
    throw DegreeMismatch("contraction by a dual form of larger degree");
  }
  const Modulus mod = f.modulus();
  HomogeneousPoly out(GradedBasis::shared(f.n(), f.degree() - dual.degree()), mod);
  const GradedBasis& ob = out.basis();
  for (std::size_t j = 0; j < f.basis().size(); ++j) {
    fe_t b = f.coeff(j);
    if (b == 0) continue;
    const Monomial& mj = f.basis().monomial(j);
    for (std::size_t i = 0; i < dual.basis().size(); ++i) {
      fe_t a = dual.coeff(i);
      if (a == 0) continue;
      const Monomial& mi = dual.basis().monomial(i);
      if (!mi.divides(mj)) continue;
      std::size_t k = ob.index_of(mj.over(mi));
      out.set_coeff(k, mod.add(out.coeff(k), mod.mul(a, b)));
    }
  }
  return out;
}

fe_t pair_full(const HomogeneousPoly& dual, const HomogeneousPoly& f) {
  if (dual.n() != f.n()) throw ArityMismatch("pairing needs equal variable counts");
  if (dual.degree() != f.degree()) {
    throw DegreeMismatch("full pairing needs equal degrees");
  }
  if (dual.modulus() != f.modulus()) throw Error("mixed moduli in pairing");
  const Modulus mod = f.modulus();
  std::uint64_t acc = 0;
  if (dual.basis_ptr() == f.basis_ptr()) {
    auto a = dual.coeffs();
    auto b = f.coeffs();
    for (std::size_t k = 0; k < a.size(); ++k) {
      acc = (acc + static_cast<std::uint64_t>(a[k]) * b[k]) % mod.p();
    }
    return static_cast<fe_t>(acc);
  }
  for (std::size_t k = 0; k < dual.basis().size(); ++k) {
    fe_t a = dual.coeff(k);
    if (a == 0) continue;
    fe_t b = f.coeff(f.basis().index_of(dual.basis().monomial(k)));
    acc = (acc + static_cast<std::uint64_t>(a) * b) % mod.p();
  }
  return static_cast<fe_t>(acc);
}

std::vector<fe_t> coeff_vector(const HomogeneousPoly& f, const GradedBasis& basis) {
  if (basis.n() != f.n() || basis.degree() != f.degree()) {
    throw DegreeMismatch("basis does not match the polynomial's graded piece");
  }
  std::vector<fe_t> out(basis.size(), 0);
  for (std::size_t k = 0; k < f.basis().size(); ++k) {
    out[basis.index_of(f.basis().monomial(k))] = f.coeff(k);
  }
  return out;
}

HomogeneousPoly HomogeneousPoly::parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad polynomial JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("d") ||
      !j.contains("p") || !j.contains("terms")) {
    throw Error("polynomial JSON needs fields n, d, p, terms");
  }
  int n = j.at("n").get<int>();
  int d = j.at("d").get<int>();
  std::int64_t praw = j.at("p").get<std::int64_t>();
  if (n < 0 || d < 0) throw Error("polynomial JSON has negative n or d");
  if (praw < 2 || praw > 0xffffffffLL) throw BadModulus("modulus out of range");
  Modulus mod(static_cast<std::uint32_t>(praw));
  HomogeneousPoly f = zero(n, d, mod);
  for (const auto& term : j.at("terms")) {
    if (!term.contains("exp") || !term.contains("c")) {
      throw Error("polynomial term needs fields exp and c");
    }
    std::vector<int> exps = term.at("exp").get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != n + 1) {
      throw ArityMismatch("term exponent vector has wrong length");
    }
    Monomial m(exps);
    if (m.degree() != d) {
      throw DegreeMismatch("term degree does not match d");
    }
    f.add_term(m, mod.reduce(term.at("c").get<std::int64_t>()));
  }
  return f;
}

std::string HomogeneousPoly::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n();
  j["d"] = degree();
  j["p"] = mod_.p();
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    nlohmann::ordered_json t;
    t["exp"] = basis_->monomial(k).exponents();
    t["c"] = coeffs_[k];
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j.dump();
}

}  // namespace sqid
