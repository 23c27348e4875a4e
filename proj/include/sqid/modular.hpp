#pragma once

#include <cstdint>

#include "sqid/errors.hpp"

namespace sqid {

// Canonical residue in [0, p). Plain integer type: elements carry no modulus,
// every operation takes the Modulus context explicitly.
using fe_t = std::uint32_t;

class Modulus {
 public:
  // Validates primality; composite, 0 or 1 raise BadModulus.
  explicit Modulus(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  fe_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return static_cast<fe_t>(r);
  }

  fe_t add(fe_t a, fe_t b) const {
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    if (s >= p_) s -= p_;
    return static_cast<fe_t>(s);
  }

  fe_t sub(fe_t a, fe_t b) const {
    return a >= b ? a - b : static_cast<fe_t>(a + (p_ - b));
  }

  fe_t neg(fe_t a) const { return a == 0 ? 0 : static_cast<fe_t>(p_ - a); }

  fe_t mul(fe_t a, fe_t b) const {
    return static_cast<fe_t>(static_cast<std::uint64_t>(a) * b % p_);
  }

  fe_t pow(fe_t base, std::uint64_t e) const;

  // Fermat inverse; a == 0 raises DivisionByZero.
  fe_t inv(fe_t a) const;

  // Smallest square root of -1 obtained as a^((p-1)/4) over ascending a >= 2.
  // Raises NoImaginaryUnit unless p = 1 mod 4.
  fe_t sqrt_minus_one() const;

  // Degree guard: raises BadModulus when p <= bound. Keeps residue
  // specializations of characteristic-0 statements honest (p must exceed the
  // degrees in play).
  void require_greater_than(std::int64_t bound) const;

  bool operator==(const Modulus& o) const { return p_ == o.p_; }
  bool operator!=(const Modulus& o) const { return p_ != o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace sqid
