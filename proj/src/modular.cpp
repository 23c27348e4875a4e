#include "sqid/modular.hpp"

#include <string>

namespace sqid {

namespace {

bool is_prime_u32(std::uint32_t v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  if (v % 3 == 0) return v == 3;
  for (std::uint64_t f = 5; f * f <= v; f += 6) {
    if (v % f == 0 || v % (f + 2) == 0) return false;
  }
  return true;
}

}  // namespace

Modulus::Modulus(std::uint32_t p) : p_(p) {
  if (!is_prime_u32(p)) {
    throw BadModulus("modulus " + std::to_string(p) + " is not prime");
  }
}

fe_t Modulus::pow(fe_t base, std::uint64_t e) const {
  std::uint64_t acc = 1;
  std::uint64_t b = base % p_;
  while (e > 0) {
    if (e & 1) acc = acc * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return static_cast<fe_t>(acc);
}

fe_t Modulus::inv(fe_t a) const {
  if (a % p_ == 0) throw DivisionByZero("inverse of 0 mod " + std::to_string(p_));
  return pow(a, p_ - 2);
}

fe_t Modulus::sqrt_minus_one() const {
  if (p_ % 4 != 1) {
    throw NoImaginaryUnit("-1 is not a square mod " + std::to_string(p_));
  }
  for (fe_t a = 2; a < p_; ++a) {
    fe_t b = pow(a, (p_ - 1) / 4);
    if (mul(b, b) == p_ - 1) {
      // the two roots are b and p-b; return the smaller for determinism
      return b < p_ - b ? b : p_ - b;
    }
  }
  throw NoImaginaryUnit("no fourth-power witness found mod " + std::to_string(p_));
}

void Modulus::require_greater_than(std::int64_t bound) const {
  if (static_cast<std::int64_t>(p_) <= bound) {
    throw BadModulus("modulus " + std::to_string(p_) +
                     " is too small; need p > " + std::to_string(bound));
  }
}

}  // namespace sqid
