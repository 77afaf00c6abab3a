#include "grpf/field.hpp"

namespace grpf {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 3 || p >= (1ULL << 31) || !is_prime(p))
    throw Error(ErrorKind::InvalidRank, "field characteristic must be an odd prime below 2^31, got " +
                                            std::to_string(p));
}

PrimeField::value_type PrimeField::from_int(long long x) const noexcept {
  const auto m = static_cast<long long>(p_);
  return static_cast<value_type>(((x % m) + m) % m);
}

PrimeField::value_type PrimeField::from_int(const BigInt& x) const {
  BigInt r = x % p_;
  if (r < 0) r += p_;
  return static_cast<value_type>(r);
}

PrimeField::value_type PrimeField::pow(value_type a, std::uint64_t e) const noexcept {
  value_type r = 1;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a % p_ == 0) throw Error(ErrorKind::Integrity, "inverse of zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

RationalField::value_type RationalField::inv(const value_type& a) const {
  if (a == 0) throw Error(ErrorKind::Integrity, "inverse of zero in Q");
  return 1 / a;
}

}  // namespace grpf
