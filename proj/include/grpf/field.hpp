#pragma once

#include <cstdint>
#include <string>

#include "grpf/common.hpp"

namespace grpf {

bool is_prime(std::uint64_t p);

/// Z/p for an odd prime p < 2^31; elements are canonical residues.
class PrimeField {
 public:
  using value_type = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }
  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  value_type from_int(long long x) const noexcept;
  value_type from_int(const BigInt& x) const;

  value_type add(value_type a, value_type b) const noexcept { return (a + b) % p_; }
  value_type sub(value_type a, value_type b) const noexcept { return (a + p_ - b) % p_; }
  value_type neg(value_type a) const noexcept { return (p_ - a) % p_; }
  value_type mul(value_type a, value_type b) const noexcept { return (a * b) % p_; }
  value_type pow(value_type a, std::uint64_t e) const noexcept;
  value_type inv(value_type a) const;
  bool is_zero(value_type a) const noexcept { return a == 0; }
  std::string str(value_type a) const { return std::to_string(a); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

/// The rationals, exact.
class RationalField {
 public:
  using value_type = BigRational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long x) const { return value_type(x); }
  value_type from_int(const BigInt& x) const { return value_type(x); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const;
  bool is_zero(const value_type& a) const { return a == 0; }
  std::string str(const value_type& a) const { return a.str(); }

  bool operator==(const RationalField&) const = default;
};

}  // namespace grpf
